#include "esfv/thermo.hpp"

#include <cmath>
#include <sstream>

#include "esfv/errors.hpp"

namespace esfv {

GasModel GasModel::make(double gamma, double R, double mu, std::optional<double> kappa,
                        double prandtl) {
  GasModel gas;
  gas.gamma = gamma;
  gas.R = R;
  gas.mu = mu;
  gas.prandtl = prandtl;
  gas.kappa = kappa ? *kappa : gas.cp() * mu / prandtl;
  gas.validate();
  return gas;
}

void GasModel::validate() const {
  if (!(gamma > 1.0)) throw DomainError("gas: gamma must exceed 1");
  if (!(R > 0.0)) throw DomainError("gas: R must be positive");
  if (!(mu >= 0.0)) throw DomainError("gas: mu must be non-negative");
  if (!(kappa >= 0.0)) throw DomainError("gas: kappa must be non-negative");
  if (!(prandtl > 0.0)) throw DomainError("gas: prandtl must be positive");
}

namespace {

[[noreturn]] void fail(const char* what, double rho, double p) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (rho=" << rho << ", p=" << p << ")";
  throw NonAdmissible(os.str());
}

}  // namespace

PrimitiveState primitive_from_conserved(const ConservedState& u, const GasModel& gas) {
  PrimitiveState q;
  q.rho = u[0];
  if (!(q.rho > 0.0)) fail("non-positive density", q.rho, 0.0);
  q.u = u[1] / q.rho;
  q.v = u[2] / q.rho;
  q.p = (gas.gamma - 1.0) * (u[3] - 0.5 * q.rho * (q.u * q.u + q.v * q.v));
  if (!(q.p > 0.0) || !std::isfinite(q.p)) fail("non-positive pressure", q.rho, q.p);
  q.T = q.p / (q.rho * gas.R);
  q.c = std::sqrt(gas.gamma * gas.R * q.T);
  q.S = gas.cv() * std::log(q.p / std::pow(q.rho, gas.gamma));
  return q;
}

ConservedState conserved_from_primitive(double rho, double u, double v, double p,
                                        const GasModel& gas) {
  if (!(rho > 0.0) || !(p > 0.0)) fail("non-positive primitive state", rho, p);
  return {{rho, rho * u, rho * v, p / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v)}};
}

FluxVector physical_flux_x(const ConservedState& u, const GasModel& gas) {
  const auto q = primitive_from_conserved(u, gas);
  return {{u[1], u[1] * q.u + q.p, u[1] * q.v, q.u * (u[3] + q.p)}};
}

FluxVector physical_flux_y(const ConservedState& u, const GasModel& gas) {
  const auto q = primitive_from_conserved(u, gas);
  return {{u[2], u[2] * q.u, u[2] * q.v + q.p, q.v * (u[3] + q.p)}};
}

FluxVector physical_flux(const ConservedState& u, Axis axis, const GasModel& gas) {
  return axis == Axis::X ? physical_flux_x(u, gas) : physical_flux_y(u, gas);
}

EntropyQuantities entropy_quantities(const PrimitiveState& q, const GasModel& gas) {
  EntropyQuantities e;
  const double cv = gas.cv();
  e.U = -q.rho * q.S;
  e.w = {{-q.S + cv * gas.gamma - 0.5 * (q.u * q.u + q.v * q.v) / q.T, q.u / q.T,
          q.v / q.T, -1.0 / q.T}};
  e.psi_x = cv * (gas.gamma - 1.0) * q.rho * q.u;
  e.psi_y = cv * (gas.gamma - 1.0) * q.rho * q.v;
  e.F = -q.rho * q.u * q.S;
  e.G = -q.rho * q.v * q.S;
  return e;
}

EntropyQuantities entropy_quantities(const ConservedState& u, const GasModel& gas) {
  return entropy_quantities(primitive_from_conserved(u, gas), gas);
}

Mat4 entropy_jacobian(const PrimitiveState& q, const GasModel& gas) {
  // Standard symmetrizer for U = -rho*s/(gamma-1), rescaled by 1/R since
  // U = -rho*S with S = cv*s.
  const double r = q.rho;
  const double E = q.p / (gas.gamma - 1.0) + 0.5 * r * (q.u * q.u + q.v * q.v);
  const double H = (E + q.p) / r;
  const double a2 = gas.gamma * q.p / r;
  const double s = 1.0 / gas.R;
  const double m01 = r * q.u, m02 = r * q.v;
  const double m11 = r * q.u * q.u + q.p, m12 = r * q.u * q.v, m22 = r * q.v * q.v + q.p;
  const double m13 = r * H * q.u, m23 = r * H * q.v;
  const double m33 = r * H * H - a2 * q.p / (gas.gamma - 1.0);
  return {s * r,   s * m01, s * m02, s * E,
          s * m01, s * m11, s * m12, s * m13,
          s * m02, s * m12, s * m22, s * m23,
          s * E,   s * m13, s * m23, s * m33};
}

Vec4 multiply(const Mat4& m, const Vec4& x) {
  Vec4 y;
  for (int i = 0; i < 4; ++i)
    y[i] = m[4 * i] * x[0] + m[4 * i + 1] * x[1] + m[4 * i + 2] * x[2] + m[4 * i + 3] * x[3];
  return y;
}

}  // namespace esfv
