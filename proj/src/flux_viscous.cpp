#include "esfv/flux_viscous.hpp"

#include "esfv/errors.hpp"

namespace esfv {

Stencil stencil(const DualMesh& mesh, std::size_t node, Axis axis) {
  const int k = mesh.k_of(node), l = mesh.l_of(node);
  const int n = axis == Axis::X ? mesh.nx() : mesh.ny();
  const int idx = axis == Axis::X ? k : l;
  const double h = axis == Axis::X ? mesh.hx() : mesh.hy();
  int lo = idx - 1, hi = idx + 1;
  double inv_h = 0.5 / h;
  if (idx == 0) {
    lo = 0;
    hi = 1;
    inv_h = 1.0 / h;
  } else if (idx == n) {
    lo = n - 1;
    hi = n;
    inv_h = 1.0 / h;
  }
  if (axis == Axis::X) return {mesh.node_index(lo, l), mesh.node_index(hi, l), inv_h};
  return {mesh.node_index(k, lo), mesh.node_index(k, hi), inv_h};
}

double weighted_one(std::span<const double> T, const DualMesh& mesh, std::size_t node, Axis axis) {
  const auto s = stencil(mesh, node, axis);
  if (!(T[node] > 0.0) || !(T[s.lo] > 0.0) || !(T[s.hi] > 0.0))
    throw NonAdmissible("non-positive temperature in viscous stencil");
  return (1.0 / T[node]) / (0.5 * (1.0 / T[s.lo] + 1.0 / T[s.hi]));
}

NodalGradients nodal_gradients(std::span<const PrimitiveState> q, const DualMesh& mesh,
                               std::size_t node) {
  const auto sx = stencil(mesh, node, Axis::X);
  const auto sy = stencil(mesh, node, Axis::Y);
  NodalGradients g;
  g.ux = (q[sx.hi].u - q[sx.lo].u) * sx.inv_h;
  g.vx = (q[sx.hi].v - q[sx.lo].v) * sx.inv_h;
  g.Tx = (q[sx.hi].T - q[sx.lo].T) * sx.inv_h;
  g.uy = (q[sy.hi].u - q[sy.lo].u) * sy.inv_h;
  g.vy = (q[sy.hi].v - q[sy.lo].v) * sy.inv_h;
  g.Ty = (q[sy.hi].T - q[sy.lo].T) * sy.inv_h;
  return g;
}

void nodal_viscous_fluxes(std::span<const PrimitiveState> q, const DualMesh& mesh,
                          const GasModel& gas, std::vector<NodalViscousFlux>& out) {
  out.resize(q.size());
  const double mu = gas.mu, kappa = gas.kappa;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto sx = stencil(mesh, i, Axis::X);
    const auto sy = stencil(mesh, i, Axis::Y);
    const auto& a = q[sx.lo];
    const auto& b = q[sx.hi];
    const auto& c = q[sy.lo];
    const auto& d = q[sy.hi];

    const double ux = (b.u - a.u) * sx.inv_h, vx = (b.v - a.v) * sx.inv_h;
    const double Tx = (b.T - a.T) * sx.inv_h;
    const double uy = (d.u - c.u) * sy.inv_h, vy = (d.v - c.v) * sy.inv_h;
    const double Ty = (d.T - c.T) * sy.inv_h;

    const double txx = mu * (4.0 / 3.0 * ux - 2.0 / 3.0 * vy);
    const double txy = mu * (uy + vx);
    const double tyy = mu * (4.0 / 3.0 * vy - 2.0 / 3.0 * ux);

    const double inv_t = 1.0 / q[i].T;
    const double one_x = inv_t / (0.5 * (1.0 / a.T + 1.0 / b.T));
    const double one_y = inv_t / (0.5 * (1.0 / c.T + 1.0 / d.T));
    const double ubar_x = 0.5 * (a.u + b.u), vbar_x = 0.5 * (a.v + b.v);
    const double ubar_y = 0.5 * (c.u + d.u), vbar_y = 0.5 * (c.v + d.v);

    auto& o = out[i];
    o.f = {{0.0, one_x * txx, one_x * txy, one_x * (ubar_x * txx + vbar_x * txy) + kappa * Tx}};
    o.g = {{0.0, one_y * txy, one_y * tyy, one_y * (ubar_y * txy + vbar_y * tyy) + kappa * Ty}};
  }
}

std::vector<NodalViscousFlux> nodal_viscous_fluxes(std::span<const ConservedState> field,
                                                   const DualMesh& mesh, const GasModel& gas) {
  std::vector<PrimitiveState> q(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) q[i] = primitive_from_conserved(field[i], gas);
  std::vector<NodalViscousFlux> out;
  nodal_viscous_fluxes(q, mesh, gas, out);
  return out;
}

}  // namespace esfv
