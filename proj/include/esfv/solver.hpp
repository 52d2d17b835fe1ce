#pragma once

#include <vector>

#include "esfv/boundary.hpp"
#include "esfv/flux_inviscid.hpp"
#include "esfv/flux_viscous.hpp"
#include "esfv/mesh.hpp"

namespace esfv {

using Field = std::vector<ConservedState>;

struct FieldState {
  Field u;
  double t = 0.0;
};

/// What the boundary did at one face during one residual evaluation.
struct FaceRecord {
  BoundaryDatum datum;
  BoundaryRegime regime = BoundaryRegime::SubsonicOutflow;
  FluxVector flux;  // n1 f_b + n2 g_b, per unit length
};

/// Optional by-products of a residual evaluation, consumed by the diagnostics.
struct AssemblyTrace {
  std::vector<NodeCache> nodes;
  std::vector<FaceRecord> faces;
  /// Viscous normal flux f^V_ij dy_ij - g^V_ij dx_ij per edge, seen from i.
  std::vector<Vec4> edge_viscous;
};

/// Semi-discrete node-centred scheme
///   V_i du_i/dt = -sum_j [(f^I - f^V)_ij dy_ij - (g^I - g^V)_ij dx_ij]
///                 - sum_faces dl (n1 f_b + n2 g_b)
/// Interior edges are accumulated in canonical edge order, so the result does
/// not depend on anything but the inputs.
class ResidualAssembler {
 public:
  ResidualAssembler(const DualMesh& mesh, const GasModel& gas, BoundaryProviders providers,
                    bool include_viscous = true);

  /// Throws NonAdmissible on a non-admissible node state.
  void rhs(const Field& u, double t, Field& dudt, AssemblyTrace* trace = nullptr);

  const DualMesh& mesh() const { return *mesh_; }
  const GasModel& gas() const { return gas_; }
  const BoundaryProviders& providers() const { return providers_; }
  bool include_viscous() const { return include_viscous_; }

 private:
  const DualMesh* mesh_;
  GasModel gas_;
  BoundaryProviders providers_;
  bool include_viscous_;
  std::vector<NodeCache> nodes_;
  std::vector<PrimitiveState> prims_;
  std::vector<NodalViscousFlux> visc_;
};

Field rhs(const Field& u, double t, const DualMesh& mesh, const GasModel& gas,
          const BoundaryProviders& providers, bool include_viscous = true);

enum class DtRule { Sum2D, Paper1D };

const char* to_string(DtRule r);
DtRule dt_rule_from_string(const std::string& s);

/// CFL * min_i [ (|u|+c)/hx + (|v|+c)/hy + 2 nu (1/hx^2 + 1/hy^2) ]^{-1},
/// nu = max(4 mu / (3 rho), gamma mu / (rho Pr)).
double stable_dt(const Field& u, const DualMesh& mesh, const GasModel& gas, double cfl);

/// Fixed step CFL * min(hx, hy) / reference_speed.
double paper1d_dt(const DualMesh& mesh, double cfl, double reference_speed);

/// Shu-Osher three-stage SSP Runge-Kutta update of u from t to t + dt, for any
/// element type with + and scalar *. rhs(u, t, dudt) fills dudt.
template <class T, class Rhs>
void ssprk3(std::vector<T>& u, double t, double dt, Rhs&& rhs) {
  const std::size_t n = u.size();
  std::vector<T> k, u1(n), u2(n);

  rhs(u, t, k);
  for (std::size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * k[i];

  rhs(u1, t + dt, k);
  for (std::size_t i = 0; i < n; ++i) u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * k[i]);

  rhs(u2, t + 0.5 * dt, k);
  for (std::size_t i = 0; i < n; ++i) u[i] = (1.0 / 3.0) * u[i] + (2.0 / 3.0) * (u2[i] + dt * k[i]);
}

/// Three-stage SSP Runge-Kutta step; the boundary is re-sampled at each stage
/// time. Throws NonAdmissible if any stage or the result is non-admissible.
void step_ssprk3(FieldState& state, double dt, ResidualAssembler& assembler);

/// Throws NonAdmissible naming the first bad node.
void check_admissible(const Field& u, const GasModel& gas);

}  // namespace esfv
