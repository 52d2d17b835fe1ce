#include "esfv/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "esfv/errors.hpp"

namespace esfv {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<PrimitiveState> primitives(const Field& u, const GasModel& gas) {
  std::vector<PrimitiveState> out;
  out.reserve(u.size());
  for (const auto& q : u) out.push_back(primitive_from_conserved(q, gas));
  return out;
}

}  // namespace

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
}

void write_text(const std::string& path, const std::string& text) {
  auto f = open_out(path);
  f << text;
  finish(f, path);
}

void write_vtk(const std::string& path, const Field& u, const DualMesh& mesh, const GasModel& gas,
               const SnapshotMeta& meta) {
  const auto prim = primitives(u, gas);
  auto f = open_out(path);
  f << "# vtk DataFile Version 3.0\n";
  f << "esfv t=" << g17(meta.t) << " config=" << meta.config_hash << "\n";
  f << "ASCII\nDATASET STRUCTURED_GRID\n";
  f << "DIMENSIONS " << mesh.nx() + 1 << " " << mesh.ny() + 1 << " 1\n";
  f << "POINTS " << mesh.num_nodes() << " double\n";
  for (std::size_t i = 0; i < mesh.num_nodes(); ++i) {
    const Vec2 p = mesh.position(i);
    f << g17(p.x) << " " << g17(p.y) << " 0\n";
  }
  f << "POINT_DATA " << mesh.num_nodes() << "\n";
  auto scalar = [&](const char* name, auto get) {
    f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (const auto& s : prim) f << g17(get(s)) << "\n";
  };
  scalar("rho", [](const PrimitiveState& s) { return s.rho; });
  scalar("p", [](const PrimitiveState& s) { return s.p; });
  scalar("T", [](const PrimitiveState& s) { return s.T; });
  scalar("S", [](const PrimitiveState& s) { return s.S; });
  f << "VECTORS velocity double\n";
  for (const auto& s : prim) f << g17(s.u) << " " << g17(s.v) << " 0\n";
  finish(f, path);
}

void write_snapshot_csv(const std::string& path, const Field& u, const DualMesh& mesh,
                        const GasModel& gas, const SnapshotMeta& meta) {
  const auto prim = primitives(u, gas);
  auto f = open_out(path);
  f << "# t=" << g17(meta.t) << " config=" << meta.config_hash << " nx=" << mesh.nx()
    << " ny=" << mesh.ny() << "\n";
  f << "x,y,rho,u,v,p,T,S\n";
  for (std::size_t i = 0; i < prim.size(); ++i) {
    const Vec2 p = mesh.position(i);
    const auto& s = prim[i];
    f << g17(p.x) << ',' << g17(p.y) << ',' << g17(s.rho) << ',' << g17(s.u) << ',' << g17(s.v)
      << ',' << g17(s.p) << ',' << g17(s.T) << ',' << g17(s.S) << '\n';
  }
  finish(f, path);
}

std::vector<SnapshotRow> read_snapshot_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::vector<SnapshotRow> rows;
  std::string line;
  bool header = false;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    double v[8];
    const char* s = line.c_str();
    for (int k = 0; k < 8; ++k) {
      char* end = nullptr;
      v[k] = std::strtod(s, &end);
      if (end == s) throw IoError("malformed snapshot row in '" + path + "'");
      s = (*end == ',') ? end + 1 : end;
    }
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return rows;
}

void write_diagnostics(const std::string& path, const std::vector<DiagnosticsRecord>& series) {
  auto f = open_out(path);
  f << diagnostics_csv_header() << '\n';
  for (const auto& r : series) f << diagnostics_csv_row(r) << '\n';
  finish(f, path);
}

}  // namespace esfv
