#include "esfv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "esfv/errors.hpp"

namespace esfv {

ResidualAssembler::ResidualAssembler(const DualMesh& mesh, const GasModel& gas,
                                     BoundaryProviders providers, bool include_viscous)
    : mesh_(&mesh), gas_(gas), providers_(std::move(providers)), include_viscous_(include_viscous) {
  for (const auto& p : providers_)
    if (!p) throw DomainError("a boundary side has no data provider");
}

void ResidualAssembler::rhs(const Field& u, double t, Field& dudt, AssemblyTrace* trace) {
  const DualMesh& m = *mesh_;
  const std::size_t n = m.num_nodes();
  if (u.size() != n) throw DomainError("field size does not match mesh");

  nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) nodes_[i] = make_node_cache(u[i], gas_);

  if (include_viscous_) {
    prims_.resize(n);
    for (std::size_t i = 0; i < n; ++i) prims_[i] = nodes_[i].q;
    nodal_viscous_fluxes(prims_, m, gas_, visc_);
  }

  dudt.assign(n, Vec4{});
  const auto& edges = m.edges();
  if (trace) trace->edge_viscous.assign(include_viscous_ ? edges.size() : 0, Vec4{});

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    // Normal flux through the face seen from i: f dy - g dx.
    const double len = ed.axis == Axis::X ? ed.dy : -ed.dx;
    FluxVector phi = numerical_flux(nodes_[ed.i], nodes_[ed.j], ed.axis, gas_) * len;
    if (include_viscous_) {
      const Vec4 fv = ed.axis == Axis::X ? edge_viscous_flux(visc_[ed.i].f, visc_[ed.j].f)
                                         : edge_viscous_flux(visc_[ed.i].g, visc_[ed.j].g);
      const Vec4 phi_v = fv * len;
      phi -= phi_v;
      if (trace) trace->edge_viscous[e] = phi_v;
    }
    dudt[ed.i] -= phi;
    dudt[ed.j] += phi;
  }

  const auto& faces = m.boundary_faces();
  if (trace) trace->faces.resize(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const BoundaryFace& face = faces[f];
    const Vec2 pos = m.position(face.node);
    const auto& provider = *providers_[static_cast<std::size_t>(face.side)];
    const BoundaryDatum datum = provider.sample(pos.x, pos.y, t, face.normal);
    const auto& q = nodes_[face.node].q;
    const BoundaryRegime regime = classify(face.normal, q, datum, gas_);
    const FluxVector fb = data_flux(face.normal, regime, u[face.node], q, datum, gas_);
    dudt[face.node] -= fb * face.length;
    if (trace) trace->faces[f] = {datum, regime, fb};
  }

  const auto& vol = m.volumes();
  for (std::size_t i = 0; i < n; ++i) dudt[i] *= 1.0 / vol[i];

  if (trace) trace->nodes = nodes_;
}

Field rhs(const Field& u, double t, const DualMesh& mesh, const GasModel& gas,
          const BoundaryProviders& providers, bool include_viscous) {
  ResidualAssembler a(mesh, gas, providers, include_viscous);
  Field out;
  a.rhs(u, t, out);
  return out;
}

const char* to_string(DtRule r) { return r == DtRule::Sum2D ? "sum2d" : "paper1d"; }

DtRule dt_rule_from_string(const std::string& s) {
  if (s == "sum2d") return DtRule::Sum2D;
  if (s == "paper1d") return DtRule::Paper1D;
  throw DomainError("unknown dt rule '" + s + "' (expected sum2d or paper1d)");
}

double stable_dt(const Field& u, const DualMesh& mesh, const GasModel& gas, double cfl) {
  const double hx = mesh.hx(), hy = mesh.hy();
  const double diff = 2.0 * (1.0 / (hx * hx) + 1.0 / (hy * hy));
  const double nu_coeff = std::max(4.0 / 3.0, gas.gamma / gas.prandtl) * gas.mu;
  double rate = 0.0;
  for (const auto& s : u) {
    const auto q = primitive_from_conserved(s, gas);
    const double nu = nu_coeff / q.rho;
    rate = std::max(rate, (std::fabs(q.u) + q.c) / hx + (std::fabs(q.v) + q.c) / hy + nu * diff);
  }
  return rate > 0.0 ? cfl / rate : std::numeric_limits<double>::infinity();
}

double paper1d_dt(const DualMesh& mesh, double cfl, double reference_speed) {
  return cfl * std::min(mesh.hx(), mesh.hy()) / reference_speed;
}

void check_admissible(const Field& u, const GasModel& gas) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    try {
      (void)primitive_from_conserved(u[i], gas);
    } catch (const NonAdmissible& e) {
      throw NonAdmissible("node " + std::to_string(i) + ": " + e.what());
    }
  }
}

void step_ssprk3(FieldState& state, double dt, ResidualAssembler& a) {
  ssprk3(state.u, state.t, dt,
         [&a](const Field& u, double t, Field& k) { a.rhs(u, t, k); });
  check_admissible(state.u, a.gas());
  state.t += dt;
}

}  // namespace esfv
