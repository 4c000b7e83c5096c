#pragma once

// Analytic observables of photon propagation by leaps between virtual pairs.
// A leap excites a pair of species i at momentum p with probability density
// P_i(p) = n_i(p) / sum_j Int n_j; it advances the photon by H/(4p) and
// delays it by a dwell with mean H/(4 eps) and spread H/(4 sqrt(3) eps).

#include <vector>

#include "model.hpp"

namespace vacuumleap {

struct PropagationStats {
  double mean_step_m = 0.0;        // n-weighted <H/(4p)>
  double steps_per_meter = 0.0;    // N/L
  double sigma_per_sqrt_m = 0.0;   // sigma/sqrt(L), s m^-1/2
  double mean_speed_mps = 0.0;     // average_speed at zero photon energy
};

struct GrbComparison {
  double e1_gev = 0.0;
  double e2_gev = 0.0;
  double model_dv_over_c = 0.0;
  double observed_limit = 0.0;
  double lv_model_dv_over_c = 0.0;
};

// GRB 980703 bound on the photon-speed variation.
inline constexpr double kGrb980703Limit = 6.3e-21;
// Linear Lorentz-violation scale fitted to the GRB compilation, GeV.
inline constexpr double kLorentzViolationScaleGev = 3.6e17;

// Distance-weighted over time-weighted leap speed with each fermion energy
// raised by eps_gamma/2:
//   v = c * [sum Int n / (p'c) dp] / [sum Int n / eps' dp],
//   eps' = eps + eps_gamma/2, p'c = sqrt(eps'^2 - (mc^2)^2).
double average_speed(double eps_gamma_j, const ModelConfig& cfg);

// (v(e1) - v(e2)) / c for photon energies in GeV, 0 < e1 <= e2.
double band_speed_variation(double e1_gev, double e2_gev, const ModelConfig& cfg);

// c (1 - eps_gamma / E_LV).
double lorentz_violation_speed(double eps_gamma_gev, double e_lv_gev);

GrbComparison grb_comparison(double e1_gev, double e2_gev, const ModelConfig& cfg,
                             double e_lv_gev = kLorentzViolationScaleGev);

// Species-integrated excitation weights W_i / sum W, catalog order.
std::vector<double> species_probabilities(const ModelConfig& cfg);

// P_i(p) = n_i(p) / sum_j Int n_j dp, per unit momentum.
double excitation_probability(double p, const FermionSpecies& species, const ModelConfig& cfg);

// N/L = (4/H) [sum Int n] / [sum Int n/p], 1/m.
double steps_per_length(const ModelConfig& cfg);

// sigma_i(p) = H / (4 sqrt(3) eps), s.
double per_step_sigma(double p, const FermionSpecies& species, const ModelConfig& cfg);

// sigma/sqrt(L) = sqrt((H/12) [sum Int n/eps^2] / [sum Int n/p]).
double dispersion_coefficient(const ModelConfig& cfg);

PropagationStats propagation_stats(const ModelConfig& cfg);

}  // namespace vacuumleap
