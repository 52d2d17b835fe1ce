#pragma once

#include "esfv/thermo.hpp"

namespace esfv {

/// Logarithmic mean (b-a)/(ln b - ln a). Throws DomainError unless a, b > 0.
double log_mean(double a, double b);

/// Kinetic-energy preserving, entropy-conservative two-point flux.
/// Satisfies (w_R - w_L).f = psi(u_R) - psi(u_L) along `axis` up to roundoff.
FluxVector ec_flux(const ConservedState& uL, const ConservedState& uR, Axis axis,
                   const GasModel& gas);

/// Wave-by-wave dissipation matrix R |Lambda| T R^T at state q, where R T R^T = du/dw.
/// Symmetric positive semi-definite; equals |A| du/dw with A the flux Jacobian.
Mat4 dissipation_matrix(const PrimitiveState& q, Axis axis, const GasModel& gas);

/// Entropy dissipation -1/2 D(avg) (w_R - w_L), D = dissipation_matrix at the
/// arithmetic mean of the primitive states.
Vec4 dissipation(const ConservedState& uL, const ConservedState& uR, Axis axis,
                 const GasModel& gas);

/// ec_flux + dissipation. Entropy stable: the two-point shuffle condition
/// 1/2 dw.f - 1/2 dpsi <= 0 holds for every admissible pair.
FluxVector numerical_flux(const ConservedState& uL, const ConservedState& uR, Axis axis,
                          const GasModel& gas);

/// Per-node quantities reused across the edges touching a node.
struct NodeCache {
  PrimitiveState q;
  Vec4 w;
  double psi_x = 0.0;
  double psi_y = 0.0;
  double beta = 0.0;  // rho / (2p)
};

NodeCache make_node_cache(const ConservedState& u, const GasModel& gas);

/// numerical_flux on precomputed node data; used by the residual assembly.
FluxVector numerical_flux(const NodeCache& L, const NodeCache& R, Axis axis, const GasModel& gas);

/// Residual of the two-point shuffle inequality; <= 0 for an entropy-stable flux.
double shuffle_residual(const ConservedState& uL, const ConservedState& uR, const FluxVector& f,
                        Axis axis, const GasModel& gas);

}  // namespace esfv
