#include "esfv/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "esfv/errors.hpp"
#include "esfv/output.hpp"

namespace esfv {

void validate_boundary_data(const Field& u, double t, const DualMesh& mesh,
                            const BoundaryProviders& providers, const GasModel& gas, double eps) {
  for (const auto& face : mesh.boundary_faces()) {
    const Vec2 pos = mesh.position(face.node);
    const BoundaryDatum d =
        providers[static_cast<std::size_t>(face.side)]->sample(pos.x, pos.y, t, face.normal);
    validate_datum(d, eps);
    const PrimitiveState q = primitive_from_conserved(u[face.node], gas);
    if (classify(face.normal, q, d, gas) == BoundaryRegime::SupersonicInflow &&
        !supersonic_inflow_datum_ok(d, face.normal, gas))
      throw InvalidBoundaryData(std::string("supersonic inflow datum rule violated on side ") +
                                to_string(face.side));
  }
}

std::optional<ExactDeviation> exact_deviation(const Field& u, double t, const DualMesh& mesh,
                                              const GasModel& gas, const ScenarioConfig& sc) {
  ExactDeviation dev;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec2 p = mesh.position(i);
    const auto ex = exact_state(sc, p.x, p.y, t, gas);
    if (!ex) return std::nullopt;
    const ConservedState qe = conserved_from_primitive(*ex, gas);
    dev.rho = std::max(dev.rho, std::abs(u[i][0] - qe[0]));
    dev.energy = std::max(dev.energy, std::abs(u[i][3] - qe[3]));
  }
  return dev;
}

Simulation::Simulation(RunConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  gas_ = cfg_.gas.resolve();
  mesh_ = std::make_unique<DualMesh>(build_mesh(cfg_.mesh.nx, cfg_.mesh.ny, cfg_.mesh.lx, cfg_.mesh.ly));
  providers_ = provider_for(cfg_.scenario, gas_);
  assembler_ = std::make_unique<ResidualAssembler>(*mesh_, gas_, providers_);
  state_.t = 0.0;
  state_.u.resize(mesh_->num_nodes());
  for (std::size_t i = 0; i < mesh_->num_nodes(); ++i) {
    const Vec2 p = mesh_->position(i);
    state_.u[i] = conserved_from_primitive(initial_state(cfg_.scenario, p.x, p.y, gas_), gas_);
  }
  check_admissible(state_.u, gas_);
  validate_boundary_data(state_.u, 0.0, *mesh_, providers_, gas_, cfg_.datum_epsilon);
}

double Simulation::rule_dt() const {
  if (cfg_.solver.dt_rule == DtRule::Paper1D)
    return paper1d_dt(*mesh_, cfg_.solver.cfl, reference_speed(cfg_.scenario, gas_));
  return stable_dt(state_.u, *mesh_, gas_, cfg_.solver.cfl);
}

void Simulation::write_snapshot(const Snapshot& s) const {
  const auto& out = cfg_.output;
  char stem[64];
  std::snprintf(stem, sizeof stem, "snapshot_t%.6f", s.t);
  const SnapshotMeta meta{s.t, config_hash(cfg_)};
  if (out.vtk) write_vtk(out.dir + "/" + stem + ".vtk", s.u, *mesh_, gas_, meta);
  if (out.csv) write_snapshot_csv(out.dir + "/" + stem + ".csv", s.u, *mesh_, gas_, meta);
}

RunResult Simulation::run(bool write_files,
                          const std::function<void(const DiagnosticsRecord&)>& on_record) {
  RunResult res;
  DiagnosticsMonitor monitor;
  const double t_end = cfg_.solver.t_end;

  std::vector<double> targets = cfg_.output.snap_at;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::size_t next_snap = 0;

  if (write_files) {
    ensure_directory(cfg_.output.dir);
    write_text(cfg_.output.dir + "/config.resolved.ini", resolved_config_text(cfg_));
  }

  auto record = [&](long step, double dt) {
    const auto r = monitor.record(state_, *assembler_, step, dt);
    if (on_record) on_record(r);
  };
  auto take_snapshots = [&]() {
    while (next_snap < targets.size() && targets[next_snap] <= state_.t) {
      Snapshot s{state_.t, state_.u};
      if (write_files) write_snapshot(s);
      res.snapshots.push_back(std::move(s));
      ++next_snap;
    }
  };
  auto flush = [&]() {
    res.diagnostics = monitor.series();
    res.final_state = state_;
    res.deviation = exact_deviation(state_.u, state_.t, *mesh_, gas_, cfg_.scenario);
    if (write_files) write_diagnostics(cfg_.output.dir + "/diagnostics.csv", res.diagnostics);
  };

  record(0, 0.0);
  take_snapshots();

  long step = 0;
  double last_dt = 0.0;
  bool recorded_last = true;
  while (state_.t < t_end) {
    double dt = rule_dt();
    double target = t_end;
    if (next_snap < targets.size()) target = std::min(target, targets[next_snap]);
    bool lands = false;
    if (state_.t + dt >= target) {
      dt = target - state_.t;
      lands = true;
    }
    if (step == 0) res.first_dt = dt;

    FieldState backup = state_;
    try {
      step_ssprk3(state_, dt, *assembler_);
    } catch (const NonAdmissible& e) {
      state_ = std::move(backup);
      if (!recorded_last) record(step, last_dt);
      res.status = RunStatus::Aborted;
      res.message = e.what();
      res.steps = step;
      flush();
      return res;
    }
    if (lands) state_.t = target;
    ++step;
    last_dt = dt;
    recorded_last = false;
    if (step % cfg_.output.diag_every == 0) {
      record(step, dt);
      recorded_last = true;
    }
    take_snapshots();
  }
  if (!recorded_last) record(step, last_dt);
  res.steps = step;
  flush();
  return res;
}

}  // namespace esfv
