#include <math.h>
#include <stdio.h>
#include <string.h>

#include "vacuumleap/vacuumleap.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static int close_to(double a, double b, double rel) { return fabs(a - b) <= rel * fabs(b); }

static void config_roundtrip(void) {
  vl_config* cfg = NULL;
  EXPECT(vl_config_create(&cfg) == VL_OK);
  EXPECT(vl_config_set(cfg, "temperature_gev", "100") == VL_OK);

  char buf[64];
  size_t needed = 0;
  EXPECT(vl_config_get(cfg, "temperature_gev", buf, sizeof buf, &needed) == VL_OK);
  EXPECT(strcmp(buf, "100") == 0);
  EXPECT(needed == 4);
  EXPECT(vl_config_get(cfg, "temperature_gev", buf, 2, &needed) == VL_ERR_BUFFER_TOO_SMALL);

  EXPECT(vl_config_set(cfg, "colour_charge", "1") == VL_ERR_UNKNOWN_KEY);
  EXPECT(strstr(vl_last_error(), "colour_charge") != NULL);
  EXPECT(vl_config_set(cfg, "temperature_gev", "warm") == VL_ERR_INVALID_ARGUMENT);
  EXPECT(vl_config_load_file(cfg, "/nonexistent/vl.cfg") == VL_ERR_IO);
  EXPECT(vl_config_apply_text(cfg, "mass_mode = zero\n") == VL_OK);

  vl_config* copy = NULL;
  EXPECT(vl_config_clone(cfg, &copy) == VL_OK);
  EXPECT(vl_config_fingerprint(copy) == vl_config_fingerprint(cfg));
  EXPECT(vl_config_set(copy, "mass_mode", "physical") == VL_OK);
  EXPECT(vl_config_fingerprint(copy) != vl_config_fingerprint(cfg));

  EXPECT(vl_config_dump(cfg, NULL, 0, &needed) == VL_OK);
  EXPECT(needed > 10);

  EXPECT(vl_species_count(cfg) == 21);
  vl_species s;
  EXPECT(vl_species_get(cfg, 0, &s) == VL_OK);
  EXPECT(strcmp(s.name, "e") == 0);
  EXPECT(vl_species_get(cfg, 21, &s) == VL_ERR_INVALID_ARGUMENT);

  vl_config_destroy(copy);
  vl_config_destroy(cfg);
  vl_config_destroy(NULL);
}

static void observables(void) {
  vl_physical_constants pc;
  vl_physical_constants_get(&pc);
  vl_config* cfg = NULL;
  EXPECT(vl_config_create(&cfg) == VL_OK);
  EXPECT(vl_config_set(cfg, "mass_mode", "zero") == VL_OK);

  vl_vacuum_constants vc;
  double per[21];
  EXPECT(vl_vacuum_constants_compute(cfg, &vc, per, 21) == VL_OK);
  EXPECT(close_to(vc.mu0, 3 * pc.h / (16 * 3.14159265358979323846 * pc.e * pc.e * pc.c), 1e-9));
  double sum = 0;
  for (int i = 0; i < 21; ++i) sum += per[i];
  EXPECT(close_to(sum, vc.inv_mu0, 1e-12));

  double v = 0;
  EXPECT(vl_average_speed(cfg, 0.0, &v) == VL_OK);
  EXPECT(v == pc.c);

  vl_propagation_stats st;
  EXPECT(vl_propagation_stats_compute(cfg, &st) == VL_OK);
  EXPECT(close_to(st.sigma_per_sqrt_m, 1.98364e-18, 1e-5));

  double energy = 0;
  EXPECT(vl_parse_quantity("30keV", VL_QUANTITY_ENERGY, &energy) == VL_OK);
  EXPECT(close_to(energy, 3e4 * pc.e, 1e-14));
  EXPECT(vl_parse_quantity("30 furlongs", VL_QUANTITY_LENGTH, &energy) == VL_ERR_INVALID_ARGUMENT);

  double dv = 0;
  EXPECT(vl_band_speed_variation(cfg, 2.0, 1.0, &dv) == VL_ERR_DOMAIN);
  EXPECT(vl_magnetic_moment(cfg, 0, 0.0, &dv) == VL_ERR_DOMAIN);
  EXPECT(vl_average_speed(NULL, 0.0, &v) == VL_ERR_INVALID_ARGUMENT);

  vl_cavity cav = {4000.0, 70, 4e-15};
  double sigma = 0, fwhm = 0;
  EXPECT(vl_config_set(cfg, "mass_mode", "physical") == VL_OK);
  EXPECT(vl_predicted_sigma(cfg, &cav, &sigma) == VL_OK);
  EXPECT(vl_broadened_fwhm(cav.pulse_fwhm_in_s, sigma, &fwhm) == VL_OK);
  EXPECT(fwhm > 4.5e-15 && fwhm < 4.7e-15);

  size_t rows = 0;
  EXPECT(vl_sensitivity_table(NULL, 0, &rows) == VL_OK);
  EXPECT(rows == 2);
  vl_sensitivity_row table[2];
  EXPECT(vl_sensitivity_table(table, 2, &rows) == VL_OK);
  EXPECT(close_to(table[1].figure_fs_per_sqrt_m, 0.01, 1e-12));

  vl_config_destroy(cfg);
}

static void simulation(void) {
  vl_config* cfg = NULL;
  EXPECT(vl_config_create(&cfg) == VL_OK);
  vl_simulation_plan plan;
  vl_simulation_plan_default(&plan);
  EXPECT(plan.chains == 200);
  plan.path_length_m = 1e-15;
  plan.chains = 16;
  plan.seed = 7;
  plan.threads = 1;
  vl_simulation_result a, b;
  EXPECT(vl_simulate(cfg, &plan, &a) == VL_OK);
  plan.threads = 3;
  EXPECT(vl_simulate(cfg, &plan, &b) == VL_OK);
  EXPECT(a.total_steps == b.total_steps);
  EXPECT(a.empirical_sigma_s == b.empirical_sigma_s);
  EXPECT(a.mean_arrival_time_s == b.mean_arrival_time_s);
  EXPECT(a.total_steps > 0);

  double ext = 0;
  EXPECT(vl_extrapolate_sigma(&a, 4e-15, &ext) == VL_OK);
  EXPECT(close_to(ext, 2 * a.empirical_sigma_s, 1e-14));

  plan.path_length_m = 1e-6;
  plan.max_steps = 1000;
  EXPECT(vl_simulate(cfg, &plan, &a) == VL_ERR_STEP_LIMIT);
  EXPECT(strstr(vl_last_error(), "max_steps") != NULL);
  vl_config_destroy(cfg);
}

int main(void) {
  EXPECT(strlen(vl_version()) > 0);
  EXPECT(strcmp(vl_status_name(VL_ERR_QUADRATURE), "quadrature failure") == 0);
  config_roundtrip();
  observables();
  simulation();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("capi: all checks passed");
  return 0;
}
