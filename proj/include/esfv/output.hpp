#pragma once

#include <string>
#include <vector>

#include "esfv/diagnostics.hpp"

namespace esfv {

struct SnapshotMeta {
  double t = 0.0;
  std::string config_hash;
};

/// One CSV snapshot row: node coordinates and primitive fields.
struct SnapshotRow {
  double x, y, rho, u, v, p, T, S;
};

/// Legacy ASCII VTK structured grid with point data rho, p, T, S and velocity.
void write_vtk(const std::string& path, const Field& u, const DualMesh& mesh, const GasModel& gas,
               const SnapshotMeta& meta);

/// Header lines start with '#'; columns x,y,rho,u,v,p,T,S in node order.
void write_snapshot_csv(const std::string& path, const Field& u, const DualMesh& mesh,
                        const GasModel& gas, const SnapshotMeta& meta);

std::vector<SnapshotRow> read_snapshot_csv(const std::string& path);

void write_diagnostics(const std::string& path, const std::vector<DiagnosticsRecord>& series);

void write_text(const std::string& path, const std::string& text);

/// Creates the directory and its parents; throws IoError on failure.
void ensure_directory(const std::string& dir);

}  // namespace esfv
