#include "vacuumleap/vacuumleap.h"

#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "error.hpp"
#include "fermi_gas.hpp"
#include "lab_predictions.hpp"
#include "leap_simulator.hpp"
#include "model.hpp"
#include "photon_kinematics.hpp"
#include "units.hpp"
#include "vacuum_response.hpp"

struct vl_config {
  vacuumleap::ModelConfig model;
};

namespace {

thread_local std::string g_last_error;

vl_status fail(vl_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class F>
vl_status guarded(F&& body) noexcept {
  try {
    body();
    return VL_OK;
  } catch (const vacuumleap::UnknownKey& e) {
    return fail(VL_ERR_UNKNOWN_KEY, e.what());
  } catch (const vacuumleap::InvalidArgument& e) {
    return fail(VL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const vacuumleap::IoError& e) {
    return fail(VL_ERR_IO, e.what());
  } catch (const vacuumleap::DomainError& e) {
    return fail(VL_ERR_DOMAIN, e.what());
  } catch (const vacuumleap::QuadratureError& e) {
    return fail(VL_ERR_QUADRATURE, e.what());
  } catch (const vacuumleap::StepLimitError& e) {
    return fail(VL_ERR_STEP_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VL_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (!p) throw vacuumleap::InvalidArgument(std::string(name) + " must not be NULL");
}

const vacuumleap::FermionSpecies& species_at(const vl_config* cfg, size_t index) {
  require(cfg, "cfg");
  if (index >= cfg->model.catalog.size())
    throw vacuumleap::InvalidArgument("species index " + std::to_string(index) + " out of range");
  return cfg->model.catalog[index];
}

void copy_text(const std::string& text, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buf) return;
  if (len < text.size() + 1) throw std::length_error("buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
}

vl_status with_buffer(const std::string& text, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buf) return VL_OK;
  if (len < text.size() + 1) return fail(VL_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  copy_text(text, buf, len, nullptr);
  return VL_OK;
}

}  // namespace

extern "C" {

const char* vl_version(void) { return "0.1.0"; }

const char* vl_last_error(void) { return g_last_error.c_str(); }

const char* vl_status_name(vl_status status) {
  switch (status) {
    case VL_OK: return "ok";
    case VL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VL_ERR_UNKNOWN_KEY: return "unknown key";
    case VL_ERR_DOMAIN: return "domain error";
    case VL_ERR_QUADRATURE: return "quadrature failure";
    case VL_ERR_STEP_LIMIT: return "step limit exceeded";
    case VL_ERR_IO: return "i/o error";
    case VL_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case VL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void vl_physical_constants_get(vl_physical_constants* out) {
  if (!out) return;
  using C = vacuumleap::Constants;
  *out = {C::h, C::hbar, C::c, C::e, C::gev_to_joule, C::mu0_measured};
}

vl_status vl_parse_quantity(const char* text, vl_quantity_kind kind, double* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    vacuumleap::QuantityKind k;
    switch (kind) {
      case VL_QUANTITY_ENERGY: k = vacuumleap::QuantityKind::energy; break;
      case VL_QUANTITY_LENGTH: k = vacuumleap::QuantityKind::length; break;
      case VL_QUANTITY_TIME: k = vacuumleap::QuantityKind::time; break;
      default: throw vacuumleap::InvalidArgument("unknown quantity kind");
    }
    *out = vacuumleap::parse_quantity(text, k);
  });
}

vl_status vl_config_create(vl_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new vl_config{};
  });
}

vl_status vl_config_clone(const vl_config* cfg, vl_config** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = new vl_config{*cfg};
  });
}

void vl_config_destroy(vl_config* cfg) { delete cfg; }

vl_status vl_config_set(vl_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    vacuumleap::set_config_value(cfg->model, key, value);
  });
}

vl_status vl_config_get(const vl_config* cfg, const char* key, char* buf, size_t len, size_t* needed) {
  std::string text;
  const vl_status st = guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    text = vacuumleap::get_config_value(cfg->model, key);
  });
  if (st != VL_OK) return st;
  return with_buffer(text, buf, len, needed);
}

vl_status vl_config_load_file(vl_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg, "cfg");
    require(path, "path");
    vacuumleap::load_config_file(cfg->model, path);
  });
}

vl_status vl_config_apply_text(vl_config* cfg, const char* text) {
  return guarded([&] {
    require(cfg, "cfg");
    require(text, "text");
    vacuumleap::apply_config_text(cfg->model, text);
  });
}

vl_status vl_config_dump(const vl_config* cfg, char* buf, size_t len, size_t* needed) {
  std::string text;
  const vl_status st = guarded([&] {
    require(cfg, "cfg");
    text = vacuumleap::dump_config(cfg->model);
  });
  if (st != VL_OK) return st;
  return with_buffer(text, buf, len, needed);
}

uint64_t vl_config_fingerprint(const vl_config* cfg) {
  return cfg ? vacuumleap::config_fingerprint(cfg->model) : 0;
}

size_t vl_species_count(const vl_config* cfg) { return cfg ? cfg->model.catalog.size() : 0; }

vl_status vl_species_get(const vl_config* cfg, size_t index, vl_species* out) {
  return guarded([&] {
    require(out, "out");
    const auto& s = species_at(cfg, index);
    *out = {s.name.c_str(), s.charge_q, s.mass_gev, s.color_multiplicity, s.colour};
  });
}

vl_status vl_vacuum_constants_compute(const vl_config* cfg, vl_vacuum_constants* out, double* per_species_inv_mu0,
                                      size_t capacity) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto vc = vacuumleap::vacuum_constants(cfg->model);
    *out = {vc.inv_mu0, vc.mu0, vc.epsilon0, vc.c_derived, vc.ratio_to_measured};
    if (per_species_inv_mu0) {
      for (size_t i = 0; i < capacity && i < vc.per_species_inv_mu0.size(); ++i)
        per_species_inv_mu0[i] = vc.per_species_inv_mu0[i];
    }
  });
}

vl_status vl_magnetic_moment(const vl_config* cfg, size_t species, double eps_j, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = vacuumleap::magnetic_moment(eps_j, species_at(cfg, species), cfg->model);
  });
}

vl_status vl_dipole_moment(const vl_config* cfg, size_t species, double p, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = vacuumleap::dipole_moment(p, species_at(cfg, species), cfg->model);
  });
}

vl_status vl_pair_density(const vl_config* cfg, double* per_species, size_t capacity, double* total) {
  return guarded([&] {
    require(cfg, "cfg");
    const auto d = vacuumleap::total_pair_density(cfg->model);
    if (per_species)
      for (size_t i = 0; i < capacity && i < d.per_species.size(); ++i) per_species[i] = d.per_species[i];
    if (total) *total = d.total;
  });
}

vl_status vl_pressure(const vl_config* cfg, size_t species, double mu_j, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto& s = species_at(cfg, species);
    *out = vacuumleap::pressure({cfg->model, mu_j}, s);
  });
}

vl_status vl_lepton_number_density(const vl_config* cfg, size_t species, double mu_j, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto& s = species_at(cfg, species);
    *out = vacuumleap::lepton_number_density({cfg->model, mu_j}, s);
  });
}

vl_status vl_average_speed(const vl_config* cfg, double photon_energy_j, double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = vacuumleap::average_speed(photon_energy_j, cfg->model);
  });
}

vl_status vl_band_speed_variation(const vl_config* cfg, double e1_gev, double e2_gev, double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = vacuumleap::band_speed_variation(e1_gev, e2_gev, cfg->model);
  });
}

vl_status vl_lorentz_violation_speed(double photon_energy_gev, double e_lv_gev, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = vacuumleap::lorentz_violation_speed(photon_energy_gev, e_lv_gev);
  });
}

vl_status vl_grb_compare(const vl_config* cfg, double e1_gev, double e2_gev, double e_lv_gev,
                         vl_grb_comparison* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const double scale = e_lv_gev > 0.0 ? e_lv_gev : vacuumleap::kLorentzViolationScaleGev;
    const auto g = vacuumleap::grb_comparison(e1_gev, e2_gev, cfg->model, scale);
    *out = {g.e1_gev, g.e2_gev, g.model_dv_over_c, g.observed_limit, g.lv_model_dv_over_c};
  });
}

vl_status vl_propagation_stats_compute(const vl_config* cfg, vl_propagation_stats* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto st = vacuumleap::propagation_stats(cfg->model);
    *out = {st.mean_step_m, st.steps_per_meter, st.sigma_per_sqrt_m, st.mean_speed_mps};
  });
}

vl_status vl_species_probabilities(const vl_config* cfg, double* out, size_t capacity) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto w = vacuumleap::species_probabilities(cfg->model);
    for (size_t i = 0; i < capacity && i < w.size(); ++i) out[i] = w[i];
  });
}

void vl_simulation_plan_default(vl_simulation_plan* plan) {
  if (!plan) return;
  const vacuumleap::SimulationPlan d;
  *plan = {d.path_length_m, d.seed, d.chains, d.max_steps, d.photon_energy_j, d.energy_shifted ? 1 : 0, d.threads};
}

vl_status vl_simulate(const vl_config* cfg, const vl_simulation_plan* plan, vl_simulation_result* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(plan, "plan");
    require(out, "out");
    vacuumleap::SimulationPlan p;
    p.path_length_m = plan->path_length_m;
    p.seed = plan->seed;
    p.chains = plan->chains;
    if (plan->max_steps != 0) p.max_steps = plan->max_steps;
    p.photon_energy_j = plan->photon_energy_j;
    p.energy_shifted = plan->energy_shifted != 0;
    p.threads = plan->threads;
    p.cfg = cfg->model;
    const auto r = vacuumleap::simulate(p);
    *out = {r.path_length_m,
            r.chains,
            r.total_steps,
            r.total_time_s,
            r.total_length_m,
            r.mean_arrival_time_s,
            r.mean_time_standard_error_s,
            r.empirical_sigma_s,
            r.standard_error_s,
            r.mean_speed_mps,
            r.mean_speed_standard_error_mps,
            r.mean_steps_per_chain,
            r.steps_standard_error};
  });
}

vl_status vl_extrapolate_sigma(const vl_simulation_result* result, double target_length_m, double* out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    vacuumleap::SimulationResult r;
    r.path_length_m = result->path_length_m;
    r.empirical_sigma_s = result->empirical_sigma_s;
    *out = r.extrapolated_sigma(target_length_m);
  });
}

vl_status vl_predicted_sigma(const vl_config* cfg, const vl_cavity* cavity, double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(cavity, "cavity");
    require(out, "out");
    const vacuumleap::CavityExperiment exp{cavity->cavity_length_m, cavity->reflections, cavity->pulse_fwhm_in_s};
    *out = vacuumleap::predicted_sigma(exp, cfg->model);
  });
}

vl_status vl_broadened_fwhm(double fwhm_in_s, double sigma_s, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = vacuumleap::broadened_fwhm(fwhm_in_s, sigma_s);
  });
}

vl_status vl_sensitivity_table(vl_sensitivity_row* rows, size_t capacity, size_t* count) {
  return guarded([&] {
    const auto table = vacuumleap::sensitivity_table();
    if (count) *count = table.size();
    if (!rows) return;
    for (size_t i = 0; i < capacity && i < table.size(); ++i) {
      vl_sensitivity_row& r = rows[i];
      std::memset(r.label, 0, sizeof r.label);
      std::strncpy(r.label, table[i].label.c_str(), sizeof r.label - 1);
      r.time_resolution_s = table[i].time_resolution_s;
      r.path_m = table[i].path_m;
      r.figure_s_per_sqrt_m = table[i].figure_s_per_sqrt_m;
      r.figure_fs_per_sqrt_m = table[i].figure_fs_per_sqrt_m;
    }
  });
}

void vl_astro_dispersion_limits(double* low_fs_per_sqrt_m, double* high_fs_per_sqrt_m) {
  if (low_fs_per_sqrt_m) *low_fs_per_sqrt_m = vacuumleap::kAstroDispersionLimitLowFs;
  if (high_fs_per_sqrt_m) *high_fs_per_sqrt_m = vacuumleap::kAstroDispersionLimitHighFs;
}

}  // extern "C"
