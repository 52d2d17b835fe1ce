#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esfv/scenarios.hpp"
#include "esfv/solver.hpp"

namespace esfv {

struct MeshConfig {
  int nx = 100;
  int ny = 100;
  double lx = 1.0;
  double ly = 1.0;
};

struct GasConfig {
  double gamma = 1.4;
  std::optional<double> R;      // defaults to 1/gamma
  double mu = 0.0;
  std::optional<double> kappa;  // defaults to cp*mu/prandtl
  double prandtl = 0.72;

  GasModel resolve() const;
};

struct SolverConfig {
  double cfl = 0.5;
  double t_end = 1.0;
  DtRule dt_rule = DtRule::Sum2D;
  bool repro = true;
};

struct OutputConfig {
  std::string dir = "out";
  long diag_every = 10;
  std::vector<double> snap_at;
  bool vtk = true;
  bool csv = true;
};

struct RunConfig {
  MeshConfig mesh;
  GasConfig gas;
  SolverConfig solver;
  OutputConfig output;
  ScenarioConfig scenario;
  double datum_epsilon = 1e-10;

  /// Throws ConfigError on any invariant violation.
  void validate() const;
};

/// Parses the flat sectioned key = value format. Unknown sections or keys,
/// malformed values and duplicate keys are ConfigErrors carrying the line.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Applies one "section.key=value" override. Cross-field invariants are left to
/// validate(), so overrides may be applied in any order.
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Fully resolved config text (defaults filled in, doubles at full precision);
/// parsing it back gives an identical RunConfig.
std::string resolved_config_text(const RunConfig& cfg);

/// 64-bit FNV-1a of the resolved text.
std::string config_hash(const RunConfig& cfg);

/// Built-in presets: freestream, vortex_exit, vortex_entry, blast.
RunConfig preset(const std::string& name);

}  // namespace esfv
