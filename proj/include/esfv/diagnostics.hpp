#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "esfv/solver.hpp"

namespace esfv {

/// One row of the diagnostics series. Column order in the CSV follows the
/// field order below.
struct DiagnosticsRecord {
  double t = 0.0;
  double total_mass = 0.0;
  double total_energy = 0.0;
  double total_entropy = 0.0;
  double mass_balance_residual = 0.0;
  double energy_balance_residual = 0.0;
  double entropy_inequality_slack = 0.0;
  double diff = 0.0;
  double min_boundary_entropy_term = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
  double outflow_mass_integral = 0.0;
  double outflow_energy_integral = 0.0;
  // Trailing extras.
  long step = 0;
  double dt = 0.0;
  double inflow_mass_bound_integral = 0.0;
  double inflow_energy_bound_integral = 0.0;
};

/// Comma-separated header matching DiagnosticsRecord.
std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const DiagnosticsRecord& r);

/// Relative residual of sum_i V_i du_i[c]/dt + sum_faces dl F_b[c] for the
/// conserved component c, scaled by max(1, sum_i V_i |du_i[c]/dt|).
double balance_residual(const Field& dudt, const DualMesh& mesh, const AssemblyTrace& trace,
                        std::size_t component);

inline double mass_balance(const Field& dudt, const DualMesh& mesh, const AssemblyTrace& trace) {
  return balance_residual(dudt, mesh, trace, 0);
}
inline double energy_balance(const Field& dudt, const DualMesh& mesh, const AssemblyTrace& trace) {
  return balance_residual(dudt, mesh, trace, 3);
}

struct EntropyBalance {
  double dU_total = 0.0;        // sum_i V_i w_i . du_i/dt
  double boundary_terms = 0.0;  // sum_faces dl (w.F_b - n.psi)
  double diff = 0.0;            // viscous entropy production, <= 0
  double slack = 0.0;           // diff - (dU_total + boundary_terms), >= 0
  double min_boundary_term = std::numeric_limits<double>::infinity();
};

EntropyBalance entropy_balance(const Field& dudt, const DualMesh& mesh,
                               const AssemblyTrace& trace);

/// -sum_edges (w_j - w_i) . (f^V dy - g^V dx); zero without viscous fluxes.
double viscous_entropy_production(const DualMesh& mesh, const AssemblyTrace& trace);

struct BoundaryFluxSums {
  double outflow_mass = 0.0;
  double outflow_energy = 0.0;
  double inflow_mass_bound = 0.0;
  double inflow_energy_bound = 0.0;
};

BoundaryFluxSums boundary_flux_sums(const DualMesh& mesh, const AssemblyTrace& trace,
                                    const GasModel& gas);

/// Builds records from fresh residual evaluations and integrates the boundary
/// sums in time with the trapezoidal rule between consecutive records.
class DiagnosticsMonitor {
 public:
  DiagnosticsRecord record(const FieldState& state, ResidualAssembler& assembler, long step,
                           double dt);

  const std::vector<DiagnosticsRecord>& series() const { return series_; }
  double running_min_boundary_term() const { return running_min_bt_; }

 private:
  std::vector<DiagnosticsRecord> series_;
  BoundaryFluxSums last_sums_;
  double running_min_bt_ = std::numeric_limits<double>::infinity();
};

}  // namespace esfv
