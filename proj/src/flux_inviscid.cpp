#include "esfv/flux_inviscid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "esfv/errors.hpp"

namespace esfv {

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_mean needs positive arguments");
  if (a > b) std::swap(a, b);
  const double d = b - a;
  if (d < 1e-4 * a) {
    // ln(b/a) = 2 atanh(z), z = (b-a)/(b+a)
    const double z = d / (b + a);
    const double z2 = z * z;
    return 0.5 * (a + b) / (1.0 + z2 * (1.0 / 3.0 + z2 * (1.0 / 5.0 + z2 / 7.0)));
  }
  return d / std::log1p(d / a);
}

NodeCache make_node_cache(const ConservedState& u, const GasModel& gas) {
  NodeCache n;
  n.q = primitive_from_conserved(u, gas);
  const auto e = entropy_quantities(n.q, gas);
  n.w = e.w;
  n.psi_x = e.psi_x;
  n.psi_y = e.psi_y;
  n.beta = 0.5 * n.q.rho / n.q.p;
  return n;
}

namespace {

FluxVector ec_kernel(const NodeCache& L, const NodeCache& R, Axis axis, const GasModel& gas) {
  const double rho_ln = log_mean(L.q.rho, R.q.rho);
  const double beta_ln = log_mean(L.beta, R.beta);
  const double u_avg = 0.5 * (L.q.u + R.q.u);
  const double v_avg = 0.5 * (L.q.v + R.q.v);
  const double p_avg = 0.5 * (L.q.rho + R.q.rho) / (L.beta + R.beta);
  const double ke_avg =
      0.25 * (L.q.u * L.q.u + L.q.v * L.q.v + R.q.u * R.q.u + R.q.v * R.q.v);
  const double h = 0.5 / ((gas.gamma - 1.0) * beta_ln) - ke_avg;

  FluxVector f;
  if (axis == Axis::X) {
    f[0] = rho_ln * u_avg;
    f[1] = f[0] * u_avg + p_avg;
    f[2] = f[0] * v_avg;
  } else {
    f[0] = rho_ln * v_avg;
    f[1] = f[0] * u_avg;
    f[2] = f[0] * v_avg + p_avg;
  }
  f[3] = h * f[0] + u_avg * f[1] + v_avg * f[2];
  return f;
}

struct Waves {
  std::array<Vec4, 4> r;
  std::array<double, 4> weight;
};

// Eigenvectors of the normal flux Jacobian at `q`, scaled so that
// sum_k T_k r_k r_k^T = du/dw; weight_k = |lambda_k| T_k.
Waves waves(const PrimitiveState& q, Axis axis, const GasModel& gas) {
  const double nx = axis == Axis::X ? 1.0 : 0.0, ny = 1.0 - nx;
  const double g = gas.gamma;
  const double a = std::sqrt(g * q.p / q.rho);
  const double vn = q.u * nx + q.v * ny;
  const double vt = q.v * nx - q.u * ny;
  const double ke = 0.5 * (q.u * q.u + q.v * q.v);
  const double h = a * a / (g - 1.0) + ke;
  const double s = 1.0 / gas.R;
  Waves w;
  w.r = {Vec4{1.0, q.u - a * nx, q.v - a * ny, h - a * vn}, Vec4{1.0, q.u, q.v, ke},
         Vec4{0.0, -ny, nx, vt}, Vec4{1.0, q.u + a * nx, q.v + a * ny, h + a * vn}};
  w.weight = {s * q.rho / (2.0 * g) * std::fabs(vn - a), s * (g - 1.0) * q.rho / g * std::fabs(vn),
              s * q.p * std::fabs(vn), s * q.rho / (2.0 * g) * std::fabs(vn + a)};
  return w;
}

PrimitiveState mean_state(const PrimitiveState& L, const PrimitiveState& R) {
  PrimitiveState m;
  m.rho = 0.5 * (L.rho + R.rho);
  m.u = 0.5 * (L.u + R.u);
  m.v = 0.5 * (L.v + R.v);
  m.p = 0.5 * (L.p + R.p);
  return m;
}

Vec4 dissipation_kernel(const NodeCache& L, const NodeCache& R, Axis axis, const GasModel& gas) {
  const Waves w = waves(mean_state(L.q, R.q), axis, gas);
  const Vec4 dw = R.w - L.w;
  Vec4 d;
  for (int k = 0; k < 4; ++k) d += w.r[k] * (w.weight[k] * dot(w.r[k], dw));
  return d * -0.5;
}

}  // namespace

FluxVector ec_flux(const ConservedState& uL, const ConservedState& uR, Axis axis,
                   const GasModel& gas) {
  return ec_kernel(make_node_cache(uL, gas), make_node_cache(uR, gas), axis, gas);
}

Mat4 dissipation_matrix(const PrimitiveState& q, Axis axis, const GasModel& gas) {
  const Waves w = waves(q, axis, gas);
  Mat4 m{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[4 * i + j] += w.weight[k] * w.r[k][i] * w.r[k][j];
  return m;
}

Vec4 dissipation(const ConservedState& uL, const ConservedState& uR, Axis axis,
                 const GasModel& gas) {
  return dissipation_kernel(make_node_cache(uL, gas), make_node_cache(uR, gas), axis, gas);
}

FluxVector numerical_flux(const NodeCache& L, const NodeCache& R, Axis axis, const GasModel& gas) {
  FluxVector f = ec_kernel(L, R, axis, gas) + dissipation_kernel(L, R, axis, gas);
#ifndef NDEBUG
  const double dpsi = axis == Axis::X ? R.psi_x - L.psi_x : R.psi_y - L.psi_y;
  const double r = 0.5 * dot(R.w - L.w, f) - 0.5 * dpsi;
  if (r > 1e-11) throw DomainError("numerical flux violates the shuffle condition");
#endif
  return f;
}

FluxVector numerical_flux(const ConservedState& uL, const ConservedState& uR, Axis axis,
                          const GasModel& gas) {
  return numerical_flux(make_node_cache(uL, gas), make_node_cache(uR, gas), axis, gas);
}

double shuffle_residual(const ConservedState& uL, const ConservedState& uR, const FluxVector& f,
                        Axis axis, const GasModel& gas) {
  const auto eL = entropy_quantities(uL, gas);
  const auto eR = entropy_quantities(uR, gas);
  const double dpsi = axis == Axis::X ? eR.psi_x - eL.psi_x : eR.psi_y - eL.psi_y;
  return 0.5 * dot(eR.w - eL.w, f) - 0.5 * dpsi;
}

}  // namespace esfv
