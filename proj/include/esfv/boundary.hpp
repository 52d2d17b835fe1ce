#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "esfv/mesh.hpp"
#include "esfv/thermo.hpp"

namespace esfv {

enum class BoundaryRegime { SupersonicInflow, SubsonicInflow, SubsonicOutflow, SupersonicOutflow };

const char* to_string(BoundaryRegime r);

inline bool is_inflow(BoundaryRegime r) {
  return r == BoundaryRegime::SupersonicInflow || r == BoundaryRegime::SubsonicInflow;
}

/// Boundary data sampled at one face point and time.
struct BoundaryDatum {
  double rho_b = 0.0;
  double p_b = 0.0;
  double v_btau = 0.0;         // tangential velocity datum along tau = (-n2, n1)
  std::optional<Vec2> v_b;     // full velocity, needed only at supersonic inflow

  double T_b(const GasModel& gas) const { return p_b / (rho_b * gas.R); }
  double c_b(const GasModel& gas) const;
};

/// Stateless source of boundary data; must be safe to call concurrently.
class BoundaryDataProvider {
 public:
  virtual ~BoundaryDataProvider() = default;
  virtual BoundaryDatum sample(double x, double y, double t, Vec2 normal) const = 0;
  virtual std::string name() const = 0;
};

/// Primitive boundary state (rho, u, v, p) as a function of (x, y, t).
struct BoundaryState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

/// Provider built from an analytic boundary state; supplies every datum component.
class AnalyticProvider final : public BoundaryDataProvider {
 public:
  using Sampler = std::function<BoundaryState(double x, double y, double t)>;

  AnalyticProvider(std::string name, Sampler sampler)
      : name_(std::move(name)), sampler_(std::move(sampler)) {}

  BoundaryDatum sample(double x, double y, double t, Vec2 normal) const override;
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Sampler sampler_;
};

/// One provider per physical side, indexed by Side.
using BoundaryProviders = std::array<std::shared_ptr<const BoundaryDataProvider>, 4>;

BoundaryProviders same_on_all_sides(std::shared_ptr<const BoundaryDataProvider> p);

/// Inflow iff v.n < 0 (sonic threshold c_b from data); otherwise outflow
/// (threshold c from the interior state). v.n == 0 counts as subsonic outflow.
BoundaryRegime classify(Vec2 normal, const PrimitiveState& q, const BoundaryDatum& datum,
                        const GasModel& gas);

/// Velocity with normal component v_n and tangential component v_btau.
Vec2 star_velocity(double v_n, Vec2 normal, double v_btau);

/// Boundary data flux n1*f_b + n2*g_b, inserted as the total boundary flux.
/// Throws DatumMissing when supersonic inflow has no full velocity datum.
FluxVector data_flux(Vec2 normal, BoundaryRegime regime, const ConservedState& u,
                     const PrimitiveState& q, const BoundaryDatum& datum, const GasModel& gas);

FluxVector data_flux(Vec2 normal, BoundaryRegime regime, const ConservedState& u,
                     const BoundaryDatum& datum, const GasModel& gas);

/// Per-unit-length boundary entropy term w.F_b - n.psi.
double boundary_entropy_term(Vec2 normal, const FluxVector& data_flux, const Vec4& w,
                             double psi_x, double psi_y);

/// Throws InvalidBoundaryData unless rho_b, p_b >= eps (and finite).
void validate_datum(const BoundaryDatum& d, double eps);

/// Supersonic inflow data must satisfy v_b.n < 0 and |v_b.n| > c_b.
bool supersonic_inflow_datum_ok(const BoundaryDatum& d, Vec2 normal, const GasModel& gas);

}  // namespace esfv
