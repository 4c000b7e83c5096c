#include "photon_kinematics.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "fermi_gas.hpp"
#include "quadrature.hpp"

namespace vacuumleap {
namespace {

// Species sums of the n-weighted moments that every ratio observable needs.
struct Moments {
  double density = 0.0;        // sum Int n dp
  double inv_momentum = 0.0;   // sum Int n/p dp
  double inv_energy_sq = 0.0;  // sum Int n/eps^2 dp
  double inv_energy = 0.0;     // sum Int n/eps dp
};

std::string label(const char* what, const FermionSpecies& s) {
  return std::string(what) + "[" + s.name + "]";
}

Moments moments(const ModelConfig& cfg, bool with_energy_terms) {
  cfg.validate();
  Moments m;
  for (const auto& s : cfg.catalog) {
    auto n = [&](double p) { return pair_density_at(p, s, cfg); };
    m.density += momentum_integral(n, cfg, label("pair_density", s)).value;
    m.inv_momentum += momentum_integral([&](double p) { return n(p) / p; }, cfg, label("density_over_p", s)).value;
    if (!with_energy_terms) continue;
    m.inv_energy_sq += momentum_integral(
        [&](double p) {
          const double eps = energy_of(p, s, cfg);
          return n(p) / (eps * eps);
        },
        cfg, label("density_over_eps2", s)).value;
    m.inv_energy += momentum_integral([&](double p) { return n(p) / energy_of(p, s, cfg); }, cfg,
                                      label("density_over_eps", s)).value;
  }
  return m;
}

}  // namespace

double average_speed(double eps_gamma_j, const ModelConfig& cfg) {
  if (!(eps_gamma_j >= 0.0) || !std::isfinite(eps_gamma_j))
    throw DomainError("average_speed: photon energy must be non-negative");
  cfg.validate();
  const double shift = 0.5 * eps_gamma_j;
  double distance = 0.0;
  double time = 0.0;
  for (const auto& s : cfg.catalog) {
    const double rest = cfg.rest_energy(s);
    auto shifted_energy = [&](double p) { return energy_of(p, s, cfg) + shift; };
    // Same expression for numerator and denominator when massless, so the
    // ratio is exactly one there.
    auto shifted_pc = [&](double eps) {
      return rest == 0.0 ? eps : std::sqrt((eps - rest) * (eps + rest));
    };
    distance += momentum_integral(
        [&](double p) { return pair_density_at(p, s, cfg) / shifted_pc(shifted_energy(p)); }, cfg,
        label("speed_distance", s)).value;
    time += momentum_integral([&](double p) { return pair_density_at(p, s, cfg) / shifted_energy(p); }, cfg,
                              label("speed_time", s)).value;
  }
  return Constants::c * (distance / time);
}

double band_speed_variation(double e1_gev, double e2_gev, const ModelConfig& cfg) {
  if (!(e1_gev > 0.0) || !(e2_gev >= e1_gev))
    throw DomainError("band_speed_variation: requires 0 < e1 <= e2");
  if (e1_gev == e2_gev) return 0.0;
  const double v1 = average_speed(e1_gev * Constants::gev_to_joule, cfg);
  const double v2 = average_speed(e2_gev * Constants::gev_to_joule, cfg);
  return (v1 - v2) / Constants::c;
}

double lorentz_violation_speed(double eps_gamma_gev, double e_lv_gev) {
  if (!(eps_gamma_gev >= 0.0)) throw DomainError("lorentz_violation_speed: photon energy must be non-negative");
  if (!(e_lv_gev > 0.0)) throw DomainError("lorentz_violation_speed: E_LV must be positive");
  return Constants::c * (1.0 - eps_gamma_gev / e_lv_gev);
}

GrbComparison grb_comparison(double e1_gev, double e2_gev, const ModelConfig& cfg, double e_lv_gev) {
  GrbComparison g;
  g.e1_gev = e1_gev;
  g.e2_gev = e2_gev;
  g.model_dv_over_c = band_speed_variation(e1_gev, e2_gev, cfg);
  g.observed_limit = kGrb980703Limit;
  if (!(e_lv_gev > 0.0)) throw DomainError("grb_comparison: E_LV must be positive");
  // The two speeds agree to ~1e-22, so take the difference analytically.
  g.lv_model_dv_over_c = (e2_gev - e1_gev) / e_lv_gev;
  return g;
}

std::vector<double> species_probabilities(const ModelConfig& cfg) {
  const auto d = total_pair_density(cfg);
  std::vector<double> w = d.per_species;
  for (auto& x : w) x /= d.total;
  return w;
}

double excitation_probability(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  return pair_density_at(p, species, cfg) / total_pair_density(cfg).total;
}

double steps_per_length(const ModelConfig& cfg) {
  const Moments m = moments(cfg, false);
  return 4.0 / planck(cfg.uncertainty_planck) * m.density / m.inv_momentum;
}

double per_step_sigma(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  const double eps = energy_of(p, species, cfg);
  if (!(eps > 0.0)) throw DomainError("per_step_sigma: zero energy (massless fermion at p = 0)");
  return planck(cfg.uncertainty_planck) / (4.0 * std::sqrt(3.0) * eps);
}

double dispersion_coefficient(const ModelConfig& cfg) {
  const Moments m = moments(cfg, true);
  return std::sqrt(planck(cfg.uncertainty_planck) / 12.0 * m.inv_energy_sq / m.inv_momentum);
}

PropagationStats propagation_stats(const ModelConfig& cfg) {
  const Moments m = moments(cfg, true);
  const double H = planck(cfg.uncertainty_planck);
  PropagationStats st;
  st.mean_step_m = H / 4.0 * m.inv_momentum / m.density;
  st.steps_per_meter = 4.0 / H * m.density / m.inv_momentum;
  st.sigma_per_sqrt_m = std::sqrt(H / 12.0 * m.inv_energy_sq / m.inv_momentum);
  // distance-weighted over time-weighted at zero photon energy
  st.mean_speed_mps = m.inv_momentum / m.inv_energy;
  return st;
}

}  // namespace vacuumleap
