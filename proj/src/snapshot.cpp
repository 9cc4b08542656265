#include "ymh/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace ymh {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'Y', 'M', 'H', '1'};

void write_i64(std::ostream& os, std::int64_t v) {
  os.write(reinterpret_cast<const char*>(&v), 8);
}
void write_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), 8);
}
std::int64_t read_i64(std::istream& is) {
  std::int64_t v;
  if (!is.read(reinterpret_cast<char*>(&v), 8))
    throw TruncatedFile("snapshot header ends early");
  return v;
}
double read_f64(std::istream& is) {
  double v;
  if (!is.read(reinterpret_cast<char*>(&v), 8))
    throw TruncatedFile("snapshot header ends early");
  return v;
}

}  // namespace

void save_snapshot(const Configuration& cfg, const EnergyParams& p,
                   const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.write(kMagic, 4);
  const Grid& g = cfg.grid;
  write_i64(os, g.n1);
  write_i64(os, g.n2);
  write_i64(os, g.n3);
  write_i64(os, g.twist_n);
  write_i64(os, g.boundary == Boundary::Dirichlet ? 1 : 0);
  write_f64(os, g.h);
  write_f64(os, p.epsilon);
  write_f64(os, p.lambda);
  os.write(reinterpret_cast<const char*>(cfg.A.v.data()),
           (std::streamsize)(cfg.A.v.size() * 8));
  os.write(reinterpret_cast<const char*>(cfg.phi.v.data()),
           (std::streamsize)(cfg.phi.v.size() * 8));
  if (!os) throw IoError("write failed: " + path);
}

std::pair<Configuration, EnergyParams> load_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path);
  char magic[4];
  if (!is.read(magic, 4)) throw TruncatedFile("snapshot shorter than the magic");
  if (std::memcmp(magic, kMagic, 4) != 0) throw BadMagic("not a YMH1 snapshot");
  std::int64_t n1 = read_i64(is), n2 = read_i64(is), n3 = read_i64(is);
  std::int64_t twist = read_i64(is), bflag = read_i64(is);
  double h = read_f64(is), eps = read_f64(is), lam = read_f64(is);
  if (bflag != 0 && bflag != 1) throw DimMismatch("bad boundary flag in snapshot");
  Grid g;
  try {
    g = Grid(n1, n2, n3, h, bflag ? Boundary::Dirichlet : Boundary::Periodic, twist);
  } catch (const ValidationError& e) {
    throw DimMismatch(std::string("invalid snapshot header: ") + e.what());
  }
  Configuration cfg(g);
  EnergyParams p(eps, lam);
  if (!is.read(reinterpret_cast<char*>(cfg.A.v.data()),
               (std::streamsize)(cfg.A.v.size() * 8)))
    throw TruncatedFile("snapshot A payload ends early");
  if (!is.read(reinterpret_cast<char*>(cfg.phi.v.data()),
               (std::streamsize)(cfg.phi.v.size() * 8)))
    throw TruncatedFile("snapshot Phi payload ends early");
  return {std::move(cfg), p};
}

}  // namespace ymh
