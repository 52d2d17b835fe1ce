#include "esfv/esfv.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <memory>
#include <string>

#include "esfv/config.hpp"
#include "esfv/errors.hpp"
#include "esfv/simulation.hpp"

struct esfv_config {
  esfv::RunConfig cfg;
};

struct esfv_simulation {
  std::unique_ptr<esfv::Simulation> sim;
};

namespace {

thread_local std::string last_error;

template <class F>
esfv_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const esfv::ConfigError& e) {
    last_error = e.what();
    return ESFV_ERR_CONFIG;
  } catch (const esfv::NonAdmissible& e) {
    last_error = e.what();
    return ESFV_ERR_NON_ADMISSIBLE;
  } catch (const esfv::InvalidBoundaryData& e) {
    last_error = e.what();
    return ESFV_ERR_BOUNDARY_DATA;
  } catch (const esfv::DatumMissing& e) {
    last_error = e.what();
    return ESFV_ERR_BOUNDARY_DATA;
  } catch (const esfv::IoError& e) {
    last_error = e.what();
    return ESFV_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ESFV_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ESFV_ERR_INTERNAL;
  }
}

esfv_status invalid(const char* what) {
  last_error = what;
  return ESFV_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* esfv_version(void) { return "0.1.0"; }

const char* esfv_last_error(void) { return last_error.c_str(); }

esfv_status esfv_config_load(const char* path, esfv_config** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new esfv_config{esfv::parse_config(path)};
    return ESFV_OK;
  });
}

esfv_status esfv_config_preset(const char* name, esfv_config** out) {
  if (!name || !out) return invalid("null argument");
  return guarded([&] {
    *out = new esfv_config{esfv::preset(name)};
    return ESFV_OK;
  });
}

esfv_status esfv_config_set(esfv_config* cfg, const char* assignment) {
  if (!cfg || !assignment) return invalid("null argument");
  return guarded([&] {
    esfv::RunConfig copy = cfg->cfg;
    esfv::apply_override(copy, assignment);
    cfg->cfg = std::move(copy);
    return ESFV_OK;
  });
}

esfv_status esfv_config_text(const esfv_config* cfg, char* buf, size_t cap, size_t* needed) {
  if (!cfg) return invalid("null argument");
  return guarded([&] {
    const std::string text = esfv::resolved_config_text(cfg->cfg);
    if (needed) *needed = text.size() + 1;
    if (!buf || cap < text.size() + 1) {
      last_error = "buffer too small";
      return ESFV_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return ESFV_OK;
  });
}

esfv_status esfv_config_hash(const esfv_config* cfg, char* buf, size_t cap) {
  if (!cfg || !buf) return invalid("null argument");
  return guarded([&] {
    const std::string h = esfv::config_hash(cfg->cfg);
    if (cap < h.size() + 1) {
      last_error = "buffer too small";
      return ESFV_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, h.c_str(), h.size() + 1);
    return ESFV_OK;
  });
}

void esfv_config_free(esfv_config* cfg) { delete cfg; }

esfv_status esfv_simulation_create(const esfv_config* cfg, esfv_simulation** out) {
  if (!cfg || !out) return invalid("null argument");
  return guarded([&] {
    *out = new esfv_simulation{std::make_unique<esfv::Simulation>(cfg->cfg)};
    return ESFV_OK;
  });
}

esfv_status esfv_simulation_dt(const esfv_simulation* sim, double* dt) {
  if (!sim || !dt) return invalid("null argument");
  return guarded([&] {
    *dt = sim->sim->rule_dt();
    return ESFV_OK;
  });
}

esfv_status esfv_simulation_num_nodes(const esfv_simulation* sim, size_t* n) {
  if (!sim || !n) return invalid("null argument");
  *n = sim->sim->mesh().num_nodes();
  return ESFV_OK;
}

esfv_status esfv_simulation_field(const esfv_simulation* sim, double* buf, size_t cap) {
  if (!sim || !buf) return invalid("null argument");
  const auto& u = sim->sim->state().u;
  if (cap < 4 * u.size()) {
    last_error = "buffer too small";
    return ESFV_ERR_BUFFER_TOO_SMALL;
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t c = 0; c < 4; ++c) buf[4 * i + c] = u[i][c];
  return ESFV_OK;
}

esfv_status esfv_simulation_run(esfv_simulation* sim, int write_files, esfv_run_summary* summary) {
  if (!sim) return invalid("null argument");
  return guarded([&] {
    const esfv::RunResult r = sim->sim->run(write_files != 0);
    if (summary) {
      constexpr double inf = std::numeric_limits<double>::infinity();
      esfv_run_summary s{};
      s.completed = r.status == esfv::RunStatus::Completed;
      s.steps = r.steps;
      s.records = static_cast<long>(r.diagnostics.size());
      s.t_final = r.final_state.t;
      s.first_dt = r.first_dt;
      s.min_rho = s.min_p = s.min_entropy_slack = inf;
      s.max_diff = -inf;
      for (const auto& d : r.diagnostics) {
        s.min_rho = std::min(s.min_rho, d.min_rho);
        s.min_p = std::min(s.min_p, d.min_p);
        s.min_entropy_slack = std::min(s.min_entropy_slack, d.entropy_inequality_slack);
        s.max_diff = std::max(s.max_diff, d.diff);
        s.max_mass_residual = std::max(s.max_mass_residual, d.mass_balance_residual);
        s.max_energy_residual = std::max(s.max_energy_residual, d.energy_balance_residual);
      }
      if (r.deviation) {
        s.has_deviation = 1;
        s.deviation_rho = r.deviation->rho;
        s.deviation_energy = r.deviation->energy;
      }
      *summary = s;
    }
    if (r.status == esfv::RunStatus::Aborted) {
      last_error = r.message;
      return ESFV_ERR_NON_ADMISSIBLE;
    }
    return ESFV_OK;
  });
}

void esfv_simulation_free(esfv_simulation* sim) { delete sim; }

}  // extern "C"
