#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "esfv/config.hpp"
#include "esfv/diagnostics.hpp"

namespace esfv {

enum class RunStatus { Completed, Aborted };

struct Snapshot {
  double t = 0.0;
  Field u;
};

/// Max-norm deviations of density and total energy from the analytic solution.
struct ExactDeviation {
  double rho = 0.0;
  double energy = 0.0;
};

struct RunResult {
  RunStatus status = RunStatus::Completed;
  std::string message;
  FieldState final_state;
  std::vector<DiagnosticsRecord> diagnostics;
  std::vector<Snapshot> snapshots;
  long steps = 0;
  double first_dt = 0.0;
  std::optional<ExactDeviation> deviation;  // at the final time, where an exact solution exists
};

std::optional<ExactDeviation> exact_deviation(const Field& u, double t, const DualMesh& mesh,
                                              const GasModel& gas, const ScenarioConfig& sc);

class Simulation {
 public:
  /// Builds mesh, gas, providers and the initial field; validates the boundary
  /// data at t = 0 (throws InvalidBoundaryData).
  explicit Simulation(RunConfig cfg);

  const RunConfig& config() const { return cfg_; }
  const DualMesh& mesh() const { return *mesh_; }
  const GasModel& gas() const { return gas_; }
  const FieldState& state() const { return state_; }
  ResidualAssembler& assembler() { return *assembler_; }

  /// Step size from the configured rule, before any capping.
  double rule_dt() const;

  /// Runs to t_end. With write_files the resolved config, snapshots and the
  /// diagnostics CSV go to config().output.dir. A NonAdmissible state ends the
  /// run with status Aborted after a last diagnostics record of the final good
  /// state has been written.
  RunResult run(bool write_files = false,
                const std::function<void(const DiagnosticsRecord&)>& on_record = {});

 private:
  void write_snapshot(const Snapshot& s) const;

  RunConfig cfg_;
  GasModel gas_;
  std::unique_ptr<DualMesh> mesh_;
  BoundaryProviders providers_;
  std::unique_ptr<ResidualAssembler> assembler_;
  FieldState state_;
};

/// Samples every provider at the boundary face points at time t and checks
/// positivity, plus the datum rule at faces the field classifies as supersonic
/// inflow.
void validate_boundary_data(const Field& u, double t, const DualMesh& mesh,
                            const BoundaryProviders& providers, const GasModel& gas, double eps);

}  // namespace esfv
