/* C interface to the esfv solver library. */
#ifndef ESFV_ESFV_H
#define ESFV_ESFV_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ESFV_BUILDING_LIBRARY)
#    define ESFV_API __declspec(dllexport)
#  else
#    define ESFV_API __declspec(dllimport)
#  endif
#else
#  define ESFV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum esfv_status {
  ESFV_OK = 0,
  ESFV_ERR_CONFIG = 1,
  ESFV_ERR_NON_ADMISSIBLE = 2,
  ESFV_ERR_BOUNDARY_DATA = 3,
  ESFV_ERR_IO = 4,
  ESFV_ERR_INVALID_ARGUMENT = 5,
  ESFV_ERR_BUFFER_TOO_SMALL = 6,
  ESFV_ERR_INTERNAL = 7
} esfv_status;

typedef struct esfv_config esfv_config;
typedef struct esfv_simulation esfv_simulation;

/* Summary of a finished (or aborted) run. Extremes are taken over all
   diagnostics records. */
typedef struct esfv_run_summary {
  int completed; /* 0 when a non-admissible state ended the run */
  long steps;
  long records;
  double t_final;
  double first_dt;
  double min_rho;
  double min_p;
  double min_entropy_slack;
  double max_diff;
  double max_mass_residual;
  double max_energy_residual;
  int has_deviation;
  double deviation_rho;
  double deviation_energy;
} esfv_run_summary;

ESFV_API const char* esfv_version(void);

/* Message of the last failing call on this thread; empty if none. */
ESFV_API const char* esfv_last_error(void);

ESFV_API esfv_status esfv_config_load(const char* path, esfv_config** out);
ESFV_API esfv_status esfv_config_preset(const char* name, esfv_config** out);
/* Applies "section.key=value". Cross-field checks run at simulation creation. */
ESFV_API esfv_status esfv_config_set(esfv_config* cfg, const char* assignment);
/* Copies the resolved config text (NUL-terminated). *needed receives the
   required size including the terminator. */
ESFV_API esfv_status esfv_config_text(const esfv_config* cfg, char* buf, size_t cap,
                                      size_t* needed);
/* 16 hex digits plus terminator; buf needs at least 17 bytes. */
ESFV_API esfv_status esfv_config_hash(const esfv_config* cfg, char* buf, size_t cap);
ESFV_API void esfv_config_free(esfv_config* cfg);

ESFV_API esfv_status esfv_simulation_create(const esfv_config* cfg, esfv_simulation** out);
/* Step size of the configured dt rule for the current state. */
ESFV_API esfv_status esfv_simulation_dt(const esfv_simulation* sim, double* dt);
ESFV_API esfv_status esfv_simulation_num_nodes(const esfv_simulation* sim, size_t* n);
/* Copies the conserved field (rho, m, n, E per node, row-major). */
ESFV_API esfv_status esfv_simulation_field(const esfv_simulation* sim, double* buf, size_t cap);
/* Runs to t_end. Returns ESFV_ERR_NON_ADMISSIBLE after flushing diagnostics
   when the run aborts; the summary is filled in either case. */
ESFV_API esfv_status esfv_simulation_run(esfv_simulation* sim, int write_files,
                                         esfv_run_summary* summary);
ESFV_API void esfv_simulation_free(esfv_simulation* sim);

#ifdef __cplusplus
}
#endif

#endif
