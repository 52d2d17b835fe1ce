#pragma once

#include <numbers>
#include <optional>
#include <string>

#include "esfv/boundary.hpp"
#include "esfv/thermo.hpp"

namespace esfv {

enum class ScenarioKind { Freestream, VortexExit, VortexEntry, Blast };

const char* to_string(ScenarioKind k);
/// Throws ConfigError on an unknown name.
ScenarioKind scenario_from_string(const std::string& name);

/// Uniform stream at angle alpha to the x-axis, speed mach * c_inf.
struct FreestreamParams {
  double mach = 0.1;
  double alpha = std::numbers::pi / 4.0;
  double rho_inf = 1.0;
  double T_inf = 1.0;
};

/// Isentropic Euler vortex advected by a freestream.
struct VortexParams {
  double radius = 0.1;
  double beta = 1.0;
  double x0 = 0.5;
  double y0 = 0.5;
  double mach = 0.1;
  double alpha = std::numbers::pi / 4.0;
  double rho_inf = 1.0;
  double T_inf = 1.0;
};

/// Two constant states at rest separated by a circle.
struct BlastParams {
  double cx = 0.5;
  double cy = 0.5;
  double radius = 0.25;
  double rho_in = 1.0;
  double p_in = 1.0;
  double rho_out = 0.125;
  double p_out = 0.1;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Freestream;
  FreestreamParams freestream;
  VortexParams vortex;
  BlastParams blast;
};

/// Fills p, T, c and S of a state given rho, u, v and p.
PrimitiveState complete_primitive(double rho, double u, double v, double p, const GasModel& gas);

PrimitiveState freestream_state(const FreestreamParams& fs, const GasModel& gas);

/// Throws NonAdmissible if the temperature dip reaches T_inf.
PrimitiveState vortex_state(double x, double y, double t, const VortexParams& vp,
                            const GasModel& gas);

/// Inner state strictly inside the circle, outer state elsewhere.
PrimitiveState blast_init(double x, double y, const BlastParams& bp, const GasModel& gas);

PrimitiveState initial_state(const ScenarioConfig& sc, double x, double y, const GasModel& gas);

/// Analytic comparison solution where one exists (freestream and both vortex cases).
std::optional<PrimitiveState> exact_state(const ScenarioConfig& sc, double x, double y, double t,
                                          const GasModel& gas);

BoundaryProviders provider_for(const ScenarioConfig& sc, const GasModel& gas);

/// Far-field signal speed |V| + c, used by the fixed-step paper1d rule.
double reference_speed(const ScenarioConfig& sc, const GasModel& gas);

}  // namespace esfv
