#pragma once

#include <span>
#include <vector>

#include "esfv/mesh.hpp"
#include "esfv/thermo.hpp"

namespace esfv {

/// Derivatives at one node from the SBP first-derivative operator: central
/// differences inside, one-sided (a1 - a0)/h on the first and last index.
struct NodalGradients {
  double ux = 0.0, uy = 0.0;
  double vx = 0.0, vy = 0.0;
  double Tx = 0.0, Ty = 0.0;
};

struct NodalViscousFlux {
  Vec4 f;  // x-direction, first component always zero
  Vec4 g;  // y-direction
};

/// Two-point stencil used by the difference and mean operators along one axis.
struct Stencil {
  std::size_t lo = 0;
  std::size_t hi = 0;
  double inv_h = 0.0;  // 1/(2h) inside, 1/h at the ends
};

Stencil stencil(const DualMesh& mesh, std::size_t node, Axis axis);

/// T^{-1} at the node divided by the stencil mean of T^{-1}. Exactly 1 for constant T.
/// Throws NonAdmissible if a temperature in the stencil is not positive.
double weighted_one(std::span<const double> T, const DualMesh& mesh, std::size_t node, Axis axis);

NodalGradients nodal_gradients(std::span<const PrimitiveState> q, const DualMesh& mesh,
                               std::size_t node);

/// Nodal viscous fluxes with temperature-weighted stresses:
///   f = (0, 1x txx, 1x txy, 1x(mean_x(u) txx + mean_x(v) txy) + kappa Dx T)
///   g = (0, 1y txy, 1y tyy, 1y(mean_y(u) txy + mean_y(v) tyy) + kappa Dy T)
void nodal_viscous_fluxes(std::span<const PrimitiveState> q, const DualMesh& mesh,
                          const GasModel& gas, std::vector<NodalViscousFlux>& out);

std::vector<NodalViscousFlux> nodal_viscous_fluxes(std::span<const ConservedState> field,
                                                   const DualMesh& mesh, const GasModel& gas);

inline Vec4 edge_viscous_flux(const Vec4& fi, const Vec4& fj) { return (fi + fj) * 0.5; }

}  // namespace esfv
