#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ymh/energy.hpp"
#include "ymh/flow.hpp"
#include "ymh/gauge.hpp"
#include "ymh/measures.hpp"
#include "ymh/radial.hpp"
#include "ymh/runconfig.hpp"
#include "ymh/snapshot.hpp"
#include "ymh/sweepout.hpp"
#include "ymh/verify.hpp"

namespace fs = std::filesystem;
using namespace ymh;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Cli {
  std::string config_path, out_dir = ".";
  long threads = 0;
  std::uint64_t seed = 0;
  bool seed_set = false, threads_set = false;
};

RunConfig load_rc(const Cli& cli) {
  RunConfig rc;
  if (!cli.config_path.empty()) {
    std::ifstream is(cli.config_path);
    if (!is) throw IoError("cannot read config: " + cli.config_path);
    std::stringstream ss;
    ss << is.rdbuf();
    rc = parse_config(ss.str());
  }
  if (cli.seed_set) rc.seed = cli.seed;
  if (cli.threads_set) rc.threads = cli.threads;
  if (rc.threads == 0)
    if (const char* e = std::getenv("YMH_THREADS")) rc.threads = std::atol(e);
  if (rc.threads <= 0) rc.threads = 1;
  return rc;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream os(dir / name);
  if (!os) throw IoError("cannot write " + (dir / name).string());
  os.precision(17);
  return os;
}

void write_manifest(const fs::path& dir, const std::string& sub, const RunConfig& rc,
                    double wall_s, const std::string& extra = "") {
  auto os = open_out(dir, "manifest.txt");
  os << "tool = ymh " << kVersion << "\nsubcommand = " << sub
     << "\nwall_time_s = " << wall_s << "\n";
  if (!extra.empty()) os << extra;
  os << "# --- config echo ---\n" << emit_config(rc);
}

void write_trace(const fs::path& dir, const std::string& name, const FlowTrace& tr) {
  auto os = open_out(dir, name);
  os << "iter,energy,residual,step\n";
  for (const auto& r : tr.rows)
    os << r.iter << "," << r.energy << "," << r.residual << "," << r.step << "\n";
}

// BPS monopole lift at lattice spacing h and scale eps, via the exact rescale
std::pair<Configuration, EnergyParams> bps_lift(const RunConfig& rc, double threshold) {
  RadialProfile prof = bps_profile(rc.r_max, (int)rc.n_r);
  Grid gv(rc.n1, rc.n2, rc.n3, rc.h / rc.epsilon, Boundary::Dirichlet);
  Configuration unit = hedgehog_to_grid(prof, gv, threshold);
  double c[3];
  gv.center(c);
  RescaleResult rr = rescale(unit, EnergyParams(1.0, rc.lambda), c, 1.0 / rc.epsilon);
  return {std::move(rr.cfg), rr.p};
}

std::pair<Configuration, EnergyParams> input_cfg(const RunConfig& rc) {
  if (!rc.snapshot_in.empty()) return load_snapshot(rc.snapshot_in);
  if (rc.boundary == "dirichlet") return bps_lift(rc, 0.8);
  Configuration cfg(rc.make_grid());
  for (std::size_t s = 0; s < cfg.grid.size(); ++s) cfg.phi.set(s, {0, 0, 1});
  return {std::move(cfg), rc.make_params()};
}

int cmd_relax(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  auto [cfg, p] = input_cfg(rc);
  FlowParams fp = rc.make_flow();
  fp.log_every = std::max<long>(1, fp.max_iters / 200);
  FlowResult fr = relax(cfg, p, fp);
  write_trace(cli.out_dir, "flow_trace.csv", fr.trace);
  {
    auto os = open_out(cli.out_dir, "energy.csv");
    os << EnergyReport::csv_header() << "\n" << total_energy(fr.cfg, p).csv_row() << "\n";
  }
  if (!rc.snapshot_out.empty()) save_snapshot(fr.cfg, p, rc.snapshot_out);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex.precision(17);
  ex << "iterations = " << fr.trace.iterations
     << "\nfinal_energy = " << fr.trace.final_energy
     << "\nfinal_residual = " << fr.trace.final_residual
     << "\ndiverged = " << (fr.trace.diverged ? 1 : 0) << "\n";
  write_manifest(cli.out_dir, "relax", rc, wall, ex.str());
  if (fr.trace.diverged) {
    std::cerr << "relax: step size collapsed (diverged)\n";
    return 2;
  }
  std::cout << "relax: E = " << fr.trace.final_energy
            << " residual = " << fr.trace.final_residual << "\n";
  return 0;
}

int cmd_sweepout(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  if (rc.boundary != "dirichlet") throw ValidationError("sweepout requires boundary = dirichlet");
  EnergyParams p = rc.make_params();
  Grid g = rc.make_grid();
  SweepoutEval ev{rc.fine_radius_eps, rc.coarse_stride};
  WidthScanResult ws = width_scan(p, g, (int)rc.y_samples, ev);
  {
    auto os = open_out(cli.out_dir, "sweepout.csv");
    os << "y1,y2,y3,energy\n";
    for (const auto& s : ws.samples)
      os << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << "\n";
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex.precision(17);
  ex << "omega_hat = " << ws.omega_hat << "\nomega_hat_normalized = "
     << ws.omega_hat / p.epsilon << "\nargmax_y = " << ws.argmax_y[0] << " "
     << ws.argmax_y[1] << " " << ws.argmax_y[2] << "\n";
  write_manifest(cli.out_dir, "sweepout", rc, wall, ex.str());
  std::cout << "sweepout: omega_hat/eps = " << ws.omega_hat / p.epsilon << "\n";
  return 0;
}

int cmd_bps(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  if (cli.config_path.empty()) {  // monopole units unless configured otherwise
    rc.epsilon = 1.0;
    rc.lambda = 0.0;
  }
  EnergyParams p(rc.epsilon, rc.lambda);
  RadialProfile prof = bps_profile(rc.r_max, (int)rc.n_r);
  EnergyReport rep = radial_energy(prof, p);
  double tail = radial_tail_estimate(prof, p);
  rep.total += tail;
  rep.normalized = rep.total / p.epsilon;
  double defect = radial_bogomolny_defect(prof, p);
  {
    auto os = open_out(cli.out_dir, "bps.csv");
    os << EnergyReport::csv_header() << ",tail,defect\n"
       << rep.csv_row() << "," << tail << "," << defect << "\n";
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex.precision(17);
  ex << "normalized_energy = " << rep.normalized << "\nbogomolny_defect = " << defect
     << "\n";
  write_manifest(cli.out_dir, "bps", rc, wall, ex.str());
  std::cout << "bps: normalized energy = " << rep.normalized << " (8*pi = "
            << 8.0 * M_PI << ")\n";
  return 0;
}

int cmd_radial(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  EnergyParams p(rc.epsilon, rc.lambda);
  RadialProfile prof = rc.lambda > 0 ? monopole_seed(rc.r_max, (int)rc.n_r)
                                     : bps_profile(rc.r_max, (int)rc.n_r);
  FlowParams fp = rc.make_flow();
  fp.log_every = std::max<long>(1, fp.max_iters / 200);
  RadialFlowResult fr = radial_relax(prof, p, fp);
  write_trace(cli.out_dir, "radial_trace.csv", fr.trace);
  {
    auto os = open_out(cli.out_dir, "radial_profile.csv");
    os << "r,H,K\n";
    for (std::size_t j = 0; j < fr.prof.r.size(); ++j)
      os << fr.prof.r[j] << "," << fr.prof.H[j] << "," << fr.prof.K[j] << "\n";
  }
  {
    auto os = open_out(cli.out_dir, "energy.csv");
    os << EnergyReport::csv_header() << "\n" << radial_energy(fr.prof, p).csv_row() << "\n";
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex.precision(17);
  ex << "iterations = " << fr.trace.iterations
     << "\nfinal_energy = " << fr.trace.final_energy
     << "\nfinal_residual = " << fr.trace.final_residual << "\n";
  write_manifest(cli.out_dir, "radial", rc, wall, ex.str());
  if (fr.trace.diverged) {
    std::cerr << "radial: step size collapsed (diverged)\n";
    return 2;
  }
  std::cout << "radial: E = " << fr.trace.final_energy
            << " residual = " << fr.trace.final_residual << "\n";
  return 0;
}

int cmd_charge(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  auto [cfg, p] = input_cfg(rc);
  const Grid& g = cfg.grid;
  double c[3];
  g.center(c);
  double rins = 0.5 * std::min({g.len(0), g.len(1), g.len(2)});
  ScalarField e = energy_density(cfg, p);
  {
    auto os = open_out(cli.out_dir, "charge.csv");
    os << "radius,mass,charge\n";
    for (int i = 1; i <= 8; ++i) {
      double r = rins * (0.2 + 0.75 * (i - 1) / 7.0);
      Region ball = Region::ball(c[0], c[1], c[2], r);
      os << r << "," << integrate(e, ball) / p.epsilon << ","
         << charge_volume(cfg, p, ball) << "\n";
    }
  }
  double rdeg = rc.radius > 0 ? rc.radius : 0.5 * rins;
  double deg = charge_degree(cfg, c, rdeg, (int)rc.level);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex.precision(17);
  ex << "degree_radius = " << rdeg << "\ncharge_degree = " << deg << "\n";
  write_manifest(cli.out_dir, "charge", rc, wall, ex.str());
  std::cout << "charge: degree(r=" << rdeg << ") = " << deg << "\n";
  return 0;
}

int cmd_bubbling(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  auto [cfg, p] = input_cfg(rc);
  MeasureField m = measures(cfg, p);
  double r = rc.ball_r_eps * p.epsilon;
  ConcentrationReport rep = detect_concentration(m, r, rc.eta_star);
  {
    auto os = open_out(cli.out_dir, "bubbling.csv");
    os << "radius,mass,charge\n";
    for (const auto& pt : rep.points)
      os << r << "," << pt.theta_hat << "," << pt.xi_hat / (8.0 * M_PI) << "\n";
  }
  {
    auto os = open_out(cli.out_dir, "concentration.txt");
    os << "eta_star = " << rep.eta_star_user << "\nball_radius = " << r
       << "\npoints = " << rep.points.size() << "\n";
    for (const auto& pt : rep.points)
      os << "point center=(" << pt.center[0] << ", " << pt.center[1] << ", "
         << pt.center[2] << ") theta_hat=" << pt.theta_hat
         << " xi_hat=" << pt.xi_hat << "\n";
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cli.out_dir, "bubbling", rc, wall,
                 "points = " + std::to_string(rep.points.size()) + "\n");
  std::cout << "bubbling: " << rep.points.size() << " concentration point(s)\n";
  return 0;
}

int cmd_gap_probe(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  if (rc.boundary != "periodic") throw ValidationError("gap-probe requires boundary = periodic");
  EnergyParams p = rc.make_params();
  Grid g = rc.make_grid();
  FlowParams fp = rc.make_flow();
  GapReport rep = gap_probe(p, g, rc.amplitude, (int)rc.trials, rc.seed, fp);
  {
    auto os = open_out(cli.out_dir, "gap.csv");
    os << "trial,seed,amplitude,final_energy,iterations,trivial\n";
    for (std::size_t t = 0; t < rep.trials.size(); ++t) {
      const auto& tr = rep.trials[t];
      os << t << "," << tr.seed << "," << tr.amplitude << "," << tr.final_energy
         << "," << tr.iterations << "," << (tr.trivial ? 1 : 0) << "\n";
    }
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream ex;
  ex << "fraction_trivial = " << rep.fraction_trivial << "\n";
  write_manifest(cli.out_dir, "gap-probe", rc, wall, ex.str());
  std::cout << "gap-probe: fraction trivial = " << rep.fraction_trivial << "\n";
  return 0;
}

int cmd_verify(const Cli& cli) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = load_rc(cli);
  VerifyReport rep = run_verify(rc.seed ? rc.seed : 1);
  {
    auto os = open_out(cli.out_dir, "verify.csv");
    os << "check,ok,value,bound\n";
    for (const auto& ch : rep.checks)
      os << ch.name << "," << (ch.ok ? 1 : 0) << "," << ch.value << "," << ch.bound
         << "\n";
  }
  for (const auto& ch : rep.checks)
    std::cout << (ch.ok ? "PASS " : "FAIL ") << ch.name << " value=" << ch.value
              << " bound=" << ch.bound << "\n";
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cli.out_dir, "verify", rc, wall,
                 std::string("all_ok = ") + (rep.all_ok() ? "1" : "0") + "\n");
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ymh: numerical workbench for the epsilon-scaled SU(2) Yang-Mills-Higgs functional"};
  app.require_subcommand(1);
  Cli cli;
  int (*handler)(const Cli&) = nullptr;
  auto add = [&](const std::string& name, const std::string& desc, int (*fn)(const Cli&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", cli.config_path, "run configuration file");
    sub->add_option("--out", cli.out_dir, "output directory");
    sub->add_option("--threads", cli.threads, "worker threads")
        ->each([&](const std::string&) { cli.threads_set = true; });
    sub->add_option("--seed", cli.seed, "RNG seed")
        ->each([&](const std::string&) { cli.seed_set = true; });
    sub->callback([&, fn]() { handler = fn; });
    return sub;
  };
  add("relax", "gradient flow from a snapshot or built-in initial pair", cmd_relax);
  add("sweepout", "min-max sweepout width scan", cmd_sweepout);
  add("bps", "closed-form BPS monopole energy and defect", cmd_bps);
  add("radial", "relax the reduced radial functional", cmd_radial);
  add("charge", "magnetic charge tables (volume and degree)", cmd_charge);
  add("bubbling", "concentration measures and detection", cmd_bubbling);
  add("gap-probe", "random low-energy perturbations of the trivial pair", cmd_gap_probe);
  add("verify", "run the invariant suite", cmd_verify);
  try {
    app.parse(argc, argv);
    return handler(cli);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const BadMagic& e) {
    std::cerr << "error: " << e.what() << "\n"; return 3;
  } catch (const TruncatedFile& e) {
    std::cerr << "error: " << e.what() << "\n"; return 3;
  } catch (const DimMismatch& e) {
    std::cerr << "error: " << e.what() << "\n"; return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n"; return 3;
  } catch (const Diverged& e) {
    std::cerr << "error: " << e.what() << "\n"; return 2;
  } catch (const YmhError& e) {
    std::cerr << "error: " << e.what() << "\n"; return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n"; return 1;
  }
}
