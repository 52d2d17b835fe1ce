#include "esfv/boundary.hpp"

#include <cmath>
#include <sstream>

#include "esfv/errors.hpp"

namespace esfv {

const char* to_string(BoundaryRegime r) {
  switch (r) {
    case BoundaryRegime::SupersonicInflow: return "supersonic-inflow";
    case BoundaryRegime::SubsonicInflow: return "subsonic-inflow";
    case BoundaryRegime::SubsonicOutflow: return "subsonic-outflow";
    case BoundaryRegime::SupersonicOutflow: return "supersonic-outflow";
  }
  return "?";
}

double BoundaryDatum::c_b(const GasModel& gas) const { return std::sqrt(gas.gamma * p_b / rho_b); }

BoundaryDatum AnalyticProvider::sample(double x, double y, double t, Vec2 normal) const {
  const BoundaryState s = sampler_(x, y, t);
  BoundaryDatum d;
  d.rho_b = s.rho;
  d.p_b = s.p;
  d.v_btau = -s.u * normal.y + s.v * normal.x;
  d.v_b = Vec2{s.u, s.v};
  return d;
}

BoundaryProviders same_on_all_sides(std::shared_ptr<const BoundaryDataProvider> p) {
  return {p, p, p, p};
}

BoundaryRegime classify(Vec2 normal, const PrimitiveState& q, const BoundaryDatum& datum,
                        const GasModel& gas) {
  const double vn = q.u * normal.x + q.v * normal.y;
  if (vn < 0.0) {
    return -vn >= datum.c_b(gas) ? BoundaryRegime::SupersonicInflow
                                 : BoundaryRegime::SubsonicInflow;
  }
  return vn >= q.c ? BoundaryRegime::SupersonicOutflow : BoundaryRegime::SubsonicOutflow;
}

Vec2 star_velocity(double v_n, Vec2 normal, double v_btau) {
  return {v_n * normal.x - v_btau * normal.y, v_n * normal.y + v_btau * normal.x};
}

FluxVector data_flux(Vec2 normal, BoundaryRegime regime, const ConservedState& u,
                     const PrimitiveState& q, const BoundaryDatum& d, const GasModel& gas) {
  const double n1 = normal.x, n2 = normal.y;
  switch (regime) {
    case BoundaryRegime::SupersonicInflow: {
      if (!d.v_b) throw DatumMissing("supersonic inflow needs the full velocity datum v_b");
      const double ub = d.v_b->x, vb = d.v_b->y;
      const double vbn = ub * n1 + vb * n2;
      const double Eb = 0.5 * d.rho_b * (ub * ub + vb * vb) + d.p_b / (gas.gamma - 1.0);
      return {{d.rho_b * vbn, d.rho_b * ub * vbn + n1 * d.p_b, d.rho_b * vb * vbn + n2 * d.p_b,
               vbn * (Eb + d.p_b)}};
    }
    case BoundaryRegime::SubsonicInflow: {
      const double vn = q.u * n1 + q.v * n2;
      const Vec2 vs = star_velocity(vn, normal, d.v_btau);
      const double Es = 0.5 * d.rho_b * (vn * vn + d.v_btau * d.v_btau) + d.p_b / (gas.gamma - 1.0);
      return {{d.rho_b * vn, vn * d.rho_b * vs.x + n1 * d.p_b, vn * d.rho_b * vs.y + n2 * d.p_b,
               vn * (Es + d.p_b)}};
    }
    case BoundaryRegime::SubsonicOutflow: {
      const double vn = q.u * n1 + q.v * n2;
      return {{u[0] * vn, u[1] * vn + n1 * d.p_b, u[2] * vn + n2 * d.p_b, vn * (u[3] + q.p)}};
    }
    case BoundaryRegime::SupersonicOutflow: {
      const double vn = q.u * n1 + q.v * n2;
      return {{u[0] * vn, u[1] * vn + n1 * q.p, u[2] * vn + n2 * q.p, vn * (u[3] + q.p)}};
    }
  }
  return {};
}

FluxVector data_flux(Vec2 normal, BoundaryRegime regime, const ConservedState& u,
                     const BoundaryDatum& datum, const GasModel& gas) {
  return data_flux(normal, regime, u, primitive_from_conserved(u, gas), datum, gas);
}

double boundary_entropy_term(Vec2 normal, const FluxVector& fb, const Vec4& w, double psi_x,
                             double psi_y) {
  return dot(w, fb) - (normal.x * psi_x + normal.y * psi_y);
}

void validate_datum(const BoundaryDatum& d, double eps) {
  if (!(d.rho_b >= eps) || !(d.p_b >= eps) || !std::isfinite(d.rho_b) || !std::isfinite(d.p_b) ||
      !std::isfinite(d.v_btau)) {
    std::ostringstream os;
    os.precision(17);
    os << "boundary datum below positivity floor " << eps << " (rho_b=" << d.rho_b
       << ", p_b=" << d.p_b << ")";
    throw InvalidBoundaryData(os.str());
  }
}

bool supersonic_inflow_datum_ok(const BoundaryDatum& d, Vec2 normal, const GasModel& gas) {
  if (!d.v_b) return false;
  const double vbn = dot(*d.v_b, normal);
  return vbn < 0.0 && -vbn > d.c_b(gas);
}

}  // namespace esfv
