#include "esfv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace esfv {

std::string diagnostics_csv_header() {
  return "t,total_mass,total_energy,total_entropy,mass_balance_residual,"
         "energy_balance_residual,entropy_inequality_slack,diff,min_boundary_entropy_term,"
         "min_rho,min_p,outflow_mass_integral,outflow_energy_integral,step,dt,"
         "inflow_mass_bound_integral,inflow_energy_bound_integral";
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                "%ld,%.17g,%.17g,%.17g",
                r.t, r.total_mass, r.total_energy, r.total_entropy, r.mass_balance_residual,
                r.energy_balance_residual, r.entropy_inequality_slack, r.diff,
                r.min_boundary_entropy_term, r.min_rho, r.min_p, r.outflow_mass_integral,
                r.outflow_energy_integral, r.step, r.dt, r.inflow_mass_bound_integral,
                r.inflow_energy_bound_integral);
  return buf;
}

double balance_residual(const Field& dudt, const DualMesh& mesh, const AssemblyTrace& trace,
                        std::size_t c) {
  const auto& vol = mesh.volumes();
  double interior = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < dudt.size(); ++i) {
    interior += vol[i] * dudt[i][c];
    scale += vol[i] * std::fabs(dudt[i][c]);
  }
  double boundary = 0.0;
  const auto& faces = mesh.boundary_faces();
  for (std::size_t f = 0; f < faces.size(); ++f) boundary += faces[f].length * trace.faces[f].flux[c];
  return std::fabs(interior + boundary) / std::max(1.0, scale);
}

double viscous_entropy_production(const DualMesh& mesh, const AssemblyTrace& trace) {
  if (trace.edge_viscous.empty()) return 0.0;
  const auto& edges = mesh.edges();
  double diff = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Vec4 dw = trace.nodes[edges[e].j].w - trace.nodes[edges[e].i].w;
    diff -= dot(dw, trace.edge_viscous[e]);
  }
  return diff;
}

EntropyBalance entropy_balance(const Field& dudt, const DualMesh& mesh,
                               const AssemblyTrace& trace) {
  EntropyBalance b;
  const auto& vol = mesh.volumes();
  for (std::size_t i = 0; i < dudt.size(); ++i) b.dU_total += vol[i] * dot(trace.nodes[i].w, dudt[i]);

  const auto& faces = mesh.boundary_faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& nc = trace.nodes[faces[f].node];
    const double term =
        boundary_entropy_term(faces[f].normal, trace.faces[f].flux, nc.w, nc.psi_x, nc.psi_y);
    b.boundary_terms += faces[f].length * term;
    b.min_boundary_term = std::min(b.min_boundary_term, term);
  }
  b.diff = viscous_entropy_production(mesh, trace);
  b.slack = b.diff - (b.dU_total + b.boundary_terms);
  return b;
}

BoundaryFluxSums boundary_flux_sums(const DualMesh& mesh, const AssemblyTrace& trace,
                                    const GasModel& gas) {
  BoundaryFluxSums s;
  const auto& faces = mesh.boundary_faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& rec = trace.faces[f];
    const double dl = faces[f].length;
    switch (rec.regime) {
      case BoundaryRegime::SubsonicOutflow:
      case BoundaryRegime::SupersonicOutflow:
        s.outflow_mass += dl * rec.flux[0];
        s.outflow_energy += dl * rec.flux[3];
        break;
      case BoundaryRegime::SubsonicInflow: {
        const auto& d = rec.datum;
        const double cb = d.c_b(gas);
        const double e_max =
            0.5 * d.rho_b * (cb * cb + d.v_btau * d.v_btau) + d.p_b / (gas.gamma - 1.0);
        s.inflow_mass_bound += dl * d.rho_b * cb;
        s.inflow_energy_bound += dl * cb * (e_max + d.p_b);
        break;
      }
      case BoundaryRegime::SupersonicInflow:
        s.inflow_mass_bound += dl * std::fabs(rec.flux[0]);
        s.inflow_energy_bound += dl * std::fabs(rec.flux[3]);
        break;
    }
  }
  return s;
}

DiagnosticsRecord DiagnosticsMonitor::record(const FieldState& state, ResidualAssembler& assembler,
                                             long step, double dt) {
  const DualMesh& mesh = assembler.mesh();
  AssemblyTrace trace;
  Field dudt;
  assembler.rhs(state.u, state.t, dudt, &trace);

  DiagnosticsRecord r;
  r.t = state.t;
  r.step = step;
  r.dt = dt;
  r.min_rho = std::numeric_limits<double>::infinity();
  r.min_p = std::numeric_limits<double>::infinity();
  const auto& vol = mesh.volumes();
  for (std::size_t i = 0; i < state.u.size(); ++i) {
    const auto& q = trace.nodes[i].q;
    r.total_mass += vol[i] * state.u[i][0];
    r.total_energy += vol[i] * state.u[i][3];
    r.total_entropy += vol[i] * (-q.rho * q.S);
    r.min_rho = std::min(r.min_rho, q.rho);
    r.min_p = std::min(r.min_p, q.p);
  }
  r.mass_balance_residual = mass_balance(dudt, mesh, trace);
  r.energy_balance_residual = energy_balance(dudt, mesh, trace);

  const auto eb = entropy_balance(dudt, mesh, trace);
  r.entropy_inequality_slack = eb.slack;
  r.diff = eb.diff;
  r.min_boundary_entropy_term = eb.min_boundary_term;
  running_min_bt_ = std::min(running_min_bt_, eb.min_boundary_term);

  const auto sums = boundary_flux_sums(mesh, trace, assembler.gas());
  if (!series_.empty()) {
    const auto& prev = series_.back();
    const double h = 0.5 * (r.t - prev.t);
    r.outflow_mass_integral = prev.outflow_mass_integral + h * (last_sums_.outflow_mass + sums.outflow_mass);
    r.outflow_energy_integral =
        prev.outflow_energy_integral + h * (last_sums_.outflow_energy + sums.outflow_energy);
    r.inflow_mass_bound_integral =
        prev.inflow_mass_bound_integral + h * (last_sums_.inflow_mass_bound + sums.inflow_mass_bound);
    r.inflow_energy_bound_integral = prev.inflow_energy_bound_integral +
                                     h * (last_sums_.inflow_energy_bound + sums.inflow_energy_bound);
  }
  last_sums_ = sums;
  series_.push_back(r);
  return r;
}

}  // namespace esfv
