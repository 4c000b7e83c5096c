#ifndef VACUUMLEAP_H
#define VACUUMLEAP_H

/*
 * vacuumleap C API.
 *
 * A vl_config handle owns one model configuration (temperature, mass mode,
 * Planck-constant conventions, moment convention, degeneracy multiplier,
 * quadrature tolerance and the fermion catalog). Every computation takes a
 * const handle and writes its result through an out-pointer; the return value
 * is a vl_status. On failure, vl_last_error() describes the problem for the
 * calling thread.
 *
 * Handles are not synchronised: share a handle between threads only for
 * concurrent const calls.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VL_BUILDING_LIBRARY)
#    define VL_API __declspec(dllexport)
#  else
#    define VL_API __declspec(dllimport)
#  endif
#else
#  define VL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vl_status {
  VL_OK = 0,
  VL_ERR_INVALID_ARGUMENT = 1,
  VL_ERR_UNKNOWN_KEY = 2,
  VL_ERR_DOMAIN = 3,
  VL_ERR_QUADRATURE = 4,
  VL_ERR_STEP_LIMIT = 5,
  VL_ERR_IO = 6,
  VL_ERR_BUFFER_TOO_SMALL = 7,
  VL_ERR_INTERNAL = 8
} vl_status;

typedef struct vl_config vl_config;

typedef enum vl_quantity_kind {
  VL_QUANTITY_ENERGY = 0, /* J;  bare numbers are GeV */
  VL_QUANTITY_LENGTH = 1, /* m */
  VL_QUANTITY_TIME = 2    /* s */
} vl_quantity_kind;

typedef struct vl_physical_constants {
  double h;
  double hbar;
  double c;
  double e;
  double gev_to_joule;
  double mu0_measured;
} vl_physical_constants;

typedef struct vl_species {
  const char* name; /* static storage owned by the handle */
  double charge_q;
  double mass_gev;
  int color_multiplicity;
  int colour;
} vl_species;

typedef struct vl_vacuum_constants {
  double inv_mu0;           /* m/H */
  double mu0;               /* H/m */
  double epsilon0;          /* F/m */
  double c_derived;         /* m/s */
  double ratio_to_measured; /* mu0 / mu0_measured */
} vl_vacuum_constants;

typedef struct vl_propagation_stats {
  double mean_step_m;
  double steps_per_meter;
  double sigma_per_sqrt_m; /* s m^-1/2 */
  double mean_speed_mps;
} vl_propagation_stats;

typedef struct vl_grb_comparison {
  double e1_gev;
  double e2_gev;
  double model_dv_over_c;
  double observed_limit;
  double lv_model_dv_over_c;
} vl_grb_comparison;

typedef struct vl_simulation_plan {
  double path_length_m;
  uint64_t seed;
  int chains;
  uint64_t max_steps;      /* per chain; 0 selects the default 1e8 */
  double photon_energy_j;
  int energy_shifted;      /* nonzero: leaps use eps + eps_gamma/2 */
  int threads;             /* 0 = hardware concurrency */
} vl_simulation_plan;

typedef struct vl_simulation_result {
  double path_length_m;
  int chains;
  uint64_t total_steps;
  double total_time_s;
  double total_length_m;
  double mean_arrival_time_s;
  double mean_time_standard_error_s;
  double empirical_sigma_s;
  double standard_error_s; /* of empirical_sigma_s */
  double mean_speed_mps;
  double mean_speed_standard_error_mps;
  double mean_steps_per_chain;
  double steps_standard_error;
} vl_simulation_result;

typedef struct vl_cavity {
  double cavity_length_m;
  int reflections;
  double pulse_fwhm_in_s;
} vl_cavity;

typedef struct vl_sensitivity_row {
  char label[32];
  double time_resolution_s;
  double path_m;
  double figure_s_per_sqrt_m;
  double figure_fs_per_sqrt_m;
} vl_sensitivity_row;

/* Library */
VL_API const char* vl_version(void);
/* Message for the last failing call on this thread; never NULL. */
VL_API const char* vl_last_error(void);
VL_API const char* vl_status_name(vl_status status);
VL_API void vl_physical_constants_get(vl_physical_constants* out);
VL_API vl_status vl_parse_quantity(const char* text, vl_quantity_kind kind, double* out);

/* Configuration */
VL_API vl_status vl_config_create(vl_config** out);
VL_API vl_status vl_config_clone(const vl_config* cfg, vl_config** out);
VL_API void vl_config_destroy(vl_config* cfg);
VL_API vl_status vl_config_set(vl_config* cfg, const char* key, const char* value);
/* Writes the value as text; *needed receives the required size incl. NUL. */
VL_API vl_status vl_config_get(const vl_config* cfg, const char* key, char* buf, size_t len, size_t* needed);
VL_API vl_status vl_config_load_file(vl_config* cfg, const char* path);
VL_API vl_status vl_config_apply_text(vl_config* cfg, const char* text);
/* Canonical "key = value" lines. */
VL_API vl_status vl_config_dump(const vl_config* cfg, char* buf, size_t len, size_t* needed);
VL_API uint64_t vl_config_fingerprint(const vl_config* cfg);

/* Catalog */
VL_API size_t vl_species_count(const vl_config* cfg);
VL_API vl_status vl_species_get(const vl_config* cfg, size_t index, vl_species* out);

/* Vacuum response. per_species may be NULL; otherwise it receives up to
   capacity per-species 1/mu0 values (catalog order). */
VL_API vl_status vl_vacuum_constants_compute(const vl_config* cfg, vl_vacuum_constants* out,
                                             double* per_species_inv_mu0, size_t capacity);
VL_API vl_status vl_magnetic_moment(const vl_config* cfg, size_t species, double eps_j, double* out);
VL_API vl_status vl_dipole_moment(const vl_config* cfg, size_t species, double p, double* out);

/* Fermi gas */
VL_API vl_status vl_pair_density(const vl_config* cfg, double* per_species, size_t capacity, double* total);
VL_API vl_status vl_pressure(const vl_config* cfg, size_t species, double mu_j, double* out);
VL_API vl_status vl_lepton_number_density(const vl_config* cfg, size_t species, double mu_j, double* out);

/* Photon kinematics */
VL_API vl_status vl_average_speed(const vl_config* cfg, double photon_energy_j, double* out);
VL_API vl_status vl_band_speed_variation(const vl_config* cfg, double e1_gev, double e2_gev, double* out);
VL_API vl_status vl_lorentz_violation_speed(double photon_energy_gev, double e_lv_gev, double* out);
/* e_lv_gev <= 0 selects the default scale 3.6e17 GeV. */
VL_API vl_status vl_grb_compare(const vl_config* cfg, double e1_gev, double e2_gev, double e_lv_gev,
                                vl_grb_comparison* out);
VL_API vl_status vl_propagation_stats_compute(const vl_config* cfg, vl_propagation_stats* out);
VL_API vl_status vl_species_probabilities(const vl_config* cfg, double* out, size_t capacity);

/* Monte Carlo */
VL_API void vl_simulation_plan_default(vl_simulation_plan* plan);
VL_API vl_status vl_simulate(const vl_config* cfg, const vl_simulation_plan* plan, vl_simulation_result* out);
VL_API vl_status vl_extrapolate_sigma(const vl_simulation_result* result, double target_length_m, double* out);

/* Laboratory predictions */
VL_API vl_status vl_predicted_sigma(const vl_config* cfg, const vl_cavity* cavity, double* out);
VL_API vl_status vl_broadened_fwhm(double fwhm_in_s, double sigma_s, double* out);
/* Built-in rows; *count receives the number of rows available. */
VL_API vl_status vl_sensitivity_table(vl_sensitivity_row* rows, size_t capacity, size_t* count);
VL_API void vl_astro_dispersion_limits(double* low_fs_per_sqrt_m, double* high_fs_per_sqrt_m);

#ifdef __cplusplus
}
#endif

#endif /* VACUUMLEAP_H */
