#include "esfv/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "esfv/errors.hpp"

namespace esfv {

const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Freestream: return "freestream";
    case ScenarioKind::VortexExit: return "vortex_exit";
    case ScenarioKind::VortexEntry: return "vortex_entry";
    case ScenarioKind::Blast: return "blast";
  }
  return "?";
}

ScenarioKind scenario_from_string(const std::string& name) {
  for (auto k : {ScenarioKind::Freestream, ScenarioKind::VortexExit, ScenarioKind::VortexEntry,
                 ScenarioKind::Blast}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

PrimitiveState complete_primitive(double rho, double u, double v, double p, const GasModel& gas) {
  return primitive_from_conserved(conserved_from_primitive(rho, u, v, p, gas), gas);
}

namespace {

double c_inf(double T_inf, const GasModel& gas) { return std::sqrt(gas.gamma * gas.R * T_inf); }

Vec2 stream_velocity(double mach, double alpha, double T_inf, const GasModel& gas) {
  const double U = mach * c_inf(T_inf, gas);
  return {U * std::cos(alpha), U * std::sin(alpha)};
}

BoundaryState as_boundary(const PrimitiveState& q) { return {q.rho, q.u, q.v, q.p}; }

}  // namespace

PrimitiveState freestream_state(const FreestreamParams& fs, const GasModel& gas) {
  const Vec2 V = stream_velocity(fs.mach, fs.alpha, fs.T_inf, gas);
  PrimitiveState q;
  q.rho = fs.rho_inf;
  q.u = V.x;
  q.v = V.y;
  q.p = fs.rho_inf * gas.R * fs.T_inf;
  q.T = fs.T_inf;
  q.c = c_inf(fs.T_inf, gas);
  q.S = gas.cv() * std::log(q.p / std::pow(q.rho, gas.gamma));
  return q;
}

PrimitiveState vortex_state(double x, double y, double t, const VortexParams& vp,
                            const GasModel& gas) {
  const Vec2 V = stream_velocity(vp.mach, vp.alpha, vp.T_inf, gas);
  const double xc = vp.x0 + V.x * t;
  const double yc = vp.y0 + V.y * t;
  const double rx = (x - xc) / vp.radius;
  const double ry = (y - yc) / vp.radius;
  const double f = rx * rx + ry * ry;
  const double e = std::exp(-0.5 * f);
  const double du = -vp.beta * ry * e;
  const double dv = vp.beta * rx * e;
  const double dT = vp.beta * vp.beta * e * e / (2.0 * gas.cp());
  const double T = vp.T_inf - dT;
  if (!(T > 0.0)) throw NonAdmissible("vortex too strong: temperature dip exceeds T_inf");

  PrimitiveState q;
  q.rho = vp.rho_inf * std::pow(T / vp.T_inf, 1.0 / (gas.gamma - 1.0));
  q.u = V.x + du;
  q.v = V.y + dv;
  q.p = q.rho * gas.R * T;
  q.T = T;
  q.c = std::sqrt(gas.gamma * gas.R * T);
  q.S = gas.cv() * std::log(q.p / std::pow(q.rho, gas.gamma));
  return q;
}

PrimitiveState blast_init(double x, double y, const BlastParams& bp, const GasModel& gas) {
  const double dx = x - bp.cx, dy = y - bp.cy;
  const bool inside = dx * dx + dy * dy < bp.radius * bp.radius;
  return inside ? complete_primitive(bp.rho_in, 0.0, 0.0, bp.p_in, gas)
                : complete_primitive(bp.rho_out, 0.0, 0.0, bp.p_out, gas);
}

PrimitiveState initial_state(const ScenarioConfig& sc, double x, double y, const GasModel& gas) {
  switch (sc.kind) {
    case ScenarioKind::Freestream: return freestream_state(sc.freestream, gas);
    case ScenarioKind::VortexExit:
    case ScenarioKind::VortexEntry: return vortex_state(x, y, 0.0, sc.vortex, gas);
    case ScenarioKind::Blast: return blast_init(x, y, sc.blast, gas);
  }
  return {};
}

std::optional<PrimitiveState> exact_state(const ScenarioConfig& sc, double x, double y, double t,
                                          const GasModel& gas) {
  switch (sc.kind) {
    case ScenarioKind::Freestream: return freestream_state(sc.freestream, gas);
    case ScenarioKind::VortexExit:
    case ScenarioKind::VortexEntry: return vortex_state(x, y, t, sc.vortex, gas);
    case ScenarioKind::Blast: return std::nullopt;
  }
  return std::nullopt;
}

BoundaryProviders provider_for(const ScenarioConfig& sc, const GasModel& gas) {
  switch (sc.kind) {
    case ScenarioKind::Freestream: {
      const auto q = as_boundary(freestream_state(sc.freestream, gas));
      return same_on_all_sides(std::make_shared<AnalyticProvider>(
          "freestream", [q](double, double, double) { return q; }));
    }
    case ScenarioKind::VortexExit: {
      FreestreamParams fs{sc.vortex.mach, sc.vortex.alpha, sc.vortex.rho_inf, sc.vortex.T_inf};
      const auto q = as_boundary(freestream_state(fs, gas));
      return same_on_all_sides(std::make_shared<AnalyticProvider>(
          "freestream", [q](double, double, double) { return q; }));
    }
    case ScenarioKind::VortexEntry: {
      const VortexParams vp = sc.vortex;
      return same_on_all_sides(std::make_shared<AnalyticProvider>(
          "vortex", [vp, gas](double x, double y, double t) {
            return as_boundary(vortex_state(x, y, t, vp, gas));
          }));
    }
    case ScenarioKind::Blast: {
      const BoundaryState q{sc.blast.rho_out, 0.0, 0.0, sc.blast.p_out};
      return same_on_all_sides(std::make_shared<AnalyticProvider>(
          "blast-ambient", [q](double, double, double) { return q; }));
    }
  }
  return {};
}

double reference_speed(const ScenarioConfig& sc, const GasModel& gas) {
  switch (sc.kind) {
    case ScenarioKind::Freestream:
      return (sc.freestream.mach + 1.0) * c_inf(sc.freestream.T_inf, gas);
    case ScenarioKind::VortexExit:
    case ScenarioKind::VortexEntry: return (sc.vortex.mach + 1.0) * c_inf(sc.vortex.T_inf, gas);
    case ScenarioKind::Blast:
      return std::sqrt(gas.gamma * std::max(sc.blast.p_in / sc.blast.rho_in,
                                            sc.blast.p_out / sc.blast.rho_out));
  }
  return 1.0;
}

}  // namespace esfv
