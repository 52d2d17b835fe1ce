#pragma once

#include <optional>

#include "esfv/vec.hpp"

namespace esfv {

/// Calorically perfect gas with constant transport coefficients.
struct GasModel {
  double gamma = 1.4;
  double R = 1.0 / 1.4;
  double mu = 0.0;
  double kappa = 0.0;
  double prandtl = 0.72;

  double cv() const { return R / (gamma - 1.0); }
  double cp() const { return gamma * cv(); }

  /// Builds a gas; kappa defaults to cp*mu/prandtl when not given.
  static GasModel make(double gamma, double R, double mu,
                       std::optional<double> kappa = std::nullopt,
                       double prandtl = 0.72);

  /// Throws DomainError unless gamma > 1, R > 0, mu >= 0, kappa >= 0, prandtl > 0.
  void validate() const;
};

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
  double T = 0.0;
  double c = 0.0;
  double S = 0.0;
};

/// Entropy function U = -rho*S and its companions.
struct EntropyQuantities {
  double U = 0.0;
  Vec4 w;
  double psi_x = 0.0;
  double psi_y = 0.0;
  double F = 0.0;
  double G = 0.0;
};

/// Throws NonAdmissible when rho <= 0 or the recovered pressure is <= 0.
PrimitiveState primitive_from_conserved(const ConservedState& u, const GasModel& gas);

ConservedState conserved_from_primitive(double rho, double u, double v, double p,
                                        const GasModel& gas);

inline ConservedState conserved_from_primitive(const PrimitiveState& q, const GasModel& gas) {
  return conserved_from_primitive(q.rho, q.u, q.v, q.p, gas);
}

FluxVector physical_flux_x(const ConservedState& u, const GasModel& gas);
FluxVector physical_flux_y(const ConservedState& u, const GasModel& gas);
FluxVector physical_flux(const ConservedState& u, Axis axis, const GasModel& gas);

EntropyQuantities entropy_quantities(const ConservedState& u, const GasModel& gas);
EntropyQuantities entropy_quantities(const PrimitiveState& q, const GasModel& gas);

/// Row-major 4x4 matrix.
using Mat4 = std::array<double, 16>;

/// Jacobian du/dw of the conserved variables with respect to the entropy
/// variables. Symmetric positive definite for admissible states.
Mat4 entropy_jacobian(const PrimitiveState& q, const GasModel& gas);

Vec4 multiply(const Mat4& m, const Vec4& x);

}  // namespace esfv
