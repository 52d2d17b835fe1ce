// Command-line driver. Talks to the solver only through the C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esfv/esfv.h"

namespace {

int exit_code(esfv_status s) {
  switch (s) {
    case ESFV_OK: return 0;
    case ESFV_ERR_CONFIG: return 2;
    case ESFV_ERR_NON_ADMISSIBLE: return 3;
    default: return 1;
  }
}

int fail(esfv_status s) {
  std::fprintf(stderr, "esfv: error: %s\n", esfv_last_error());
  return exit_code(s);
}

struct Overrides {
  std::string output_dir;
  long diag_every = 0;
  std::string snap_at;
  std::string dt_rule;
  bool repro = false;
  std::vector<std::string> sets;
};

esfv_status apply(esfv_config* cfg, const Overrides& o) {
  std::vector<std::string> a = o.sets;
  if (!o.output_dir.empty()) a.push_back("output.dir=" + o.output_dir);
  if (o.diag_every > 0) a.push_back("output.diag_every=" + std::to_string(o.diag_every));
  if (!o.snap_at.empty()) a.push_back("output.snap_at=" + o.snap_at);
  if (!o.dt_rule.empty()) a.push_back("solver.dt_rule=" + o.dt_rule);
  if (o.repro) a.push_back("solver.repro=true");
  for (const auto& s : a)
    if (esfv_status st = esfv_config_set(cfg, s.c_str()); st != ESFV_OK) return st;
  return ESFV_OK;
}

void print_config(const esfv_config* cfg) {
  size_t needed = 0;
  esfv_config_text(cfg, nullptr, 0, &needed);
  std::string text(needed, '\0');
  if (esfv_config_text(cfg, text.data(), text.size(), nullptr) == ESFV_OK) {
    text.pop_back();
    std::printf("%s", text.c_str());
  }
}

int execute(esfv_config* cfg, const Overrides& o, bool dry_run) {
  if (esfv_status s = apply(cfg, o); s != ESFV_OK) return fail(s);

  char hash[17];
  esfv_config_hash(cfg, hash, sizeof hash);
  esfv_simulation* sim = nullptr;
  if (esfv_status s = esfv_simulation_create(cfg, &sim); s != ESFV_OK) return fail(s);

  double dt = 0.0;
  if (esfv_status s = esfv_simulation_dt(sim, &dt); s != ESFV_OK) {
    esfv_simulation_free(sim);
    return fail(s);
  }
  if (dry_run) {
    print_config(cfg);
    std::printf("\n# config hash %s\n# dt %.10g\n", hash, dt);
    esfv_simulation_free(sim);
    return 0;
  }
  std::printf("config hash %s\ndt %.10g\n", hash, dt);
  std::fflush(stdout);

  esfv_run_summary sum{};
  const esfv_status s = esfv_simulation_run(sim, 1, &sum);
  esfv_simulation_free(sim);
  if (s != ESFV_OK && s != ESFV_ERR_NON_ADMISSIBLE) return fail(s);

  std::printf("steps %ld\nt %.10g\nmin rho %.6g\nmin p %.6g\n", sum.steps, sum.t_final,
              sum.min_rho, sum.min_p);
  std::printf("max mass residual %.3e\nmax energy residual %.3e\n", sum.max_mass_residual,
              sum.max_energy_residual);
  std::printf("max DIFF %.3e\nmin entropy slack %.3e\n", sum.max_diff, sum.min_entropy_slack);
  if (sum.has_deviation)
    std::printf("max |rho - rho_exact| %.6e\nmax |E - E_exact| %.6e\n", sum.deviation_rho,
                sum.deviation_energy);
  if (s != ESFV_OK) return fail(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-stable finite-volume Navier-Stokes solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", esfv_version());

  Overrides o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--output-dir", o.output_dir, "Directory for snapshots and diagnostics");
    sub->add_option("--diag-every", o.diag_every, "Diagnostics cadence in steps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--snap-at", o.snap_at, "Comma-separated snapshot times");
    sub->add_option("--dt-rule", o.dt_rule, "Time-step rule")
        ->check(CLI::IsMember({"sum2d", "paper1d"}));
    sub->add_flag("--repro", o.repro, "Reproducibility mode");
    sub->add_option("--set", o.sets, "Override one key, e.g. --set gas.mu=0.01");
  };

  std::string path, name;
  auto* run = app.add_subcommand("run", "Run a simulation from a config file");
  run->add_option("config", path, "Config file")->required();
  add_common(run);
  auto* pre = app.add_subcommand("preset", "Run one of the built-in scenarios");
  pre->add_option("name", name, "freestream, vortex_exit, vortex_entry or blast")->required();
  add_common(pre);
  auto* check = app.add_subcommand("check", "Validate a config file and print it resolved");
  check->add_option("config", path, "Config file")->required();
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  esfv_config* cfg = nullptr;
  esfv_status s = pre->parsed() ? esfv_config_preset(name.c_str(), &cfg)
                                : esfv_config_load(path.c_str(), &cfg);
  if (s != ESFV_OK) return fail(s);
  const int rc = execute(cfg, o, check->parsed());
  esfv_config_free(cfg);
  return rc;
}
