#include "ymh/runconfig.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace ymh {

Grid RunConfig::make_grid() const {
  Boundary b = boundary == "dirichlet" ? Boundary::Dirichlet : Boundary::Periodic;
  return Grid(n1, n2, n3, h, b, twist_n);
}

EnergyParams RunConfig::make_params() const { return EnergyParams(epsilon, lambda); }

FlowParams RunConfig::make_flow() const {
  FlowParams fp;
  fp.step0 = step0;
  fp.tol_residual = tol_residual;
  fp.max_iters = max_iters;
  fp.backtrack = backtrack;
  return fp;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing junk");
    return x;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + v + "'");
  }
}

template <class Int>
Int parse_int(const std::string& v, int line) {
  Int x{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + v + "'");
  return x;
}

using Setter = std::function<void(RunConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& key_table() {
  static const std::map<std::string, Setter> t = {
      {"n1", [](RunConfig& c, const std::string& v, int l) { c.n1 = parse_int<std::int64_t>(v, l); }},
      {"n2", [](RunConfig& c, const std::string& v, int l) { c.n2 = parse_int<std::int64_t>(v, l); }},
      {"n3", [](RunConfig& c, const std::string& v, int l) { c.n3 = parse_int<std::int64_t>(v, l); }},
      {"h", [](RunConfig& c, const std::string& v, int l) { c.h = parse_double(v, l); }},
      {"boundary", [](RunConfig& c, const std::string& v, int) { c.boundary = v; }},
      {"twist_n", [](RunConfig& c, const std::string& v, int l) { c.twist_n = parse_int<std::int64_t>(v, l); }},
      {"epsilon", [](RunConfig& c, const std::string& v, int l) { c.epsilon = parse_double(v, l); }},
      {"lambda", [](RunConfig& c, const std::string& v, int l) { c.lambda = parse_double(v, l); }},
      {"step0", [](RunConfig& c, const std::string& v, int l) { c.step0 = parse_double(v, l); }},
      {"tol_residual", [](RunConfig& c, const std::string& v, int l) { c.tol_residual = parse_double(v, l); }},
      {"backtrack", [](RunConfig& c, const std::string& v, int l) { c.backtrack = parse_double(v, l); }},
      {"max_iters", [](RunConfig& c, const std::string& v, int l) { c.max_iters = parse_int<std::int64_t>(v, l); }},
      {"seed", [](RunConfig& c, const std::string& v, int l) { c.seed = parse_int<std::uint64_t>(v, l); }},
      {"threads", [](RunConfig& c, const std::string& v, int l) { c.threads = parse_int<std::int64_t>(v, l); }},
      {"snapshot_in", [](RunConfig& c, const std::string& v, int) { c.snapshot_in = v; }},
      {"snapshot_out", [](RunConfig& c, const std::string& v, int) { c.snapshot_out = v; }},
      {"y1", [](RunConfig& c, const std::string& v, int l) { c.y1 = parse_double(v, l); }},
      {"y2", [](RunConfig& c, const std::string& v, int l) { c.y2 = parse_double(v, l); }},
      {"y3", [](RunConfig& c, const std::string& v, int l) { c.y3 = parse_double(v, l); }},
      {"y_samples", [](RunConfig& c, const std::string& v, int l) { c.y_samples = parse_int<std::int64_t>(v, l); }},
      {"fine_radius_eps", [](RunConfig& c, const std::string& v, int l) { c.fine_radius_eps = parse_double(v, l); }},
      {"coarse_stride", [](RunConfig& c, const std::string& v, int l) { c.coarse_stride = parse_int<std::int64_t>(v, l); }},
      {"r_max", [](RunConfig& c, const std::string& v, int l) { c.r_max = parse_double(v, l); }},
      {"n_r", [](RunConfig& c, const std::string& v, int l) { c.n_r = parse_int<std::int64_t>(v, l); }},
      {"radius", [](RunConfig& c, const std::string& v, int l) { c.radius = parse_double(v, l); }},
      {"level", [](RunConfig& c, const std::string& v, int l) { c.level = parse_int<std::int64_t>(v, l); }},
      {"ball_r_eps", [](RunConfig& c, const std::string& v, int l) { c.ball_r_eps = parse_double(v, l); }},
      {"eta_star", [](RunConfig& c, const std::string& v, int l) { c.eta_star = parse_double(v, l); }},
      {"amplitude", [](RunConfig& c, const std::string& v, int l) { c.amplitude = parse_double(v, l); }},
      {"trials", [](RunConfig& c, const std::string& v, int l) { c.trials = parse_int<std::int64_t>(v, l); }},
  };
  return t;
}

void validate(const RunConfig& c) {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ValidationError(std::string(key) + ": " + what);
  };
  require(c.n1 >= 4 && c.n2 >= 4 && c.n3 >= 4, "n1/n2/n3", "grid dims must be >= 4");
  require(c.h > 0, "h", "must be > 0");
  require(c.boundary == "periodic" || c.boundary == "dirichlet", "boundary",
          "must be 'periodic' or 'dirichlet'");
  require(c.twist_n == 0 || c.boundary == "periodic", "twist_n", "requires periodic");
  require(c.epsilon > 0, "epsilon", "must be > 0");
  require(c.lambda >= 0, "lambda", "must be >= 0");
  require(c.step0 > 0, "step0", "must be > 0");
  require(c.tol_residual > 0, "tol_residual", "must be > 0");
  require(c.backtrack > 0 && c.backtrack < 1, "backtrack", "must be in (0,1)");
  require(c.max_iters >= 0, "max_iters", "must be >= 0");
  require(c.threads >= 0, "threads", "must be >= 0");
  require(c.y_samples > 0, "y_samples", "must be > 0");
  require(c.fine_radius_eps > 0, "fine_radius_eps", "must be > 0");
  require(c.coarse_stride > 0, "coarse_stride", "must be > 0");
  require(c.r_max >= 10, "r_max", "must be >= 10");
  require(c.n_r >= 1000, "n_r", "must be >= 1000");
  require(c.radius >= 0, "radius", "must be >= 0");
  require(c.level >= 0 && c.level <= 7, "level", "must be in [0,7]");
  require(c.ball_r_eps > 0, "ball_r_eps", "must be > 0");
  require(c.eta_star > 0, "eta_star", "must be > 0");
  require(c.amplitude > 0, "amplitude", "must be > 0");
  require(c.trials > 0, "trials", "must be > 0");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig rc;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    auto it = key_table().find(key);
    if (it == key_table().end())
      throw ValidationError(key + ": unknown key (line " + std::to_string(lineno) + ")");
    it->second(rc, val, lineno);
  }
  validate(rc);
  return rc;
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "n1 = " << c.n1 << "\nn2 = " << c.n2 << "\nn3 = " << c.n3
     << "\nh = " << c.h << "\nboundary = " << c.boundary
     << "\ntwist_n = " << c.twist_n << "\nepsilon = " << c.epsilon
     << "\nlambda = " << c.lambda << "\nstep0 = " << c.step0
     << "\ntol_residual = " << c.tol_residual << "\nbacktrack = " << c.backtrack
     << "\nmax_iters = " << c.max_iters << "\nseed = " << c.seed
     << "\nthreads = " << c.threads;
  if (!c.snapshot_in.empty()) os << "\nsnapshot_in = " << c.snapshot_in;
  if (!c.snapshot_out.empty()) os << "\nsnapshot_out = " << c.snapshot_out;
  os << "\ny1 = " << c.y1 << "\ny2 = " << c.y2 << "\ny3 = " << c.y3
     << "\ny_samples = " << c.y_samples
     << "\nfine_radius_eps = " << c.fine_radius_eps
     << "\ncoarse_stride = " << c.coarse_stride << "\nr_max = " << c.r_max
     << "\nn_r = " << c.n_r << "\nradius = " << c.radius
     << "\nlevel = " << c.level << "\nball_r_eps = " << c.ball_r_eps
     << "\neta_star = " << c.eta_star << "\namplitude = " << c.amplitude
     << "\ntrials = " << c.trials << "\n";
  return os.str();
}

}  // namespace ymh
