#pragma once

// Experimental observables derived from the dispersion coefficient.

#include <cmath>
#include <string>
#include <vector>

#include "model.hpp"

namespace vacuumleap {

struct CavityExperiment {
  double cavity_length_m = 4000.0;
  int reflections = 70;
  double pulse_fwhm_in_s = 4e-15;

  double effective_path_m() const noexcept { return cavity_length_m * reflections; }
  void validate() const;
};

struct SensitivityFigure {
  std::string label;
  double time_resolution_s = 0.0;
  double path_m = 0.0;
  double figure_s_per_sqrt_m = 0.0;   // time_resolution / sqrt(path)
  double figure_fs_per_sqrt_m = 0.0;  // same, in fs m^-1/2
};

// Current astrophysical dispersion limits (GRB and pulsar timing), fs m^-1/2.
inline constexpr double kAstroDispersionLimitLowFs = 0.2;
inline constexpr double kAstroDispersionLimitHighFs = 0.3;

// FWHM of a Gaussian with unit standard deviation, 2 sqrt(2 ln 2).
inline const double kGaussianFwhmPerSigma = 2.0 * std::sqrt(2.0 * std::log(2.0));

// dispersion_coefficient(cfg) * sqrt(length * reflections).
double predicted_sigma(const CavityExperiment& exp, const ModelConfig& cfg);
// Same, reusing an already computed coefficient.
double predicted_sigma(const CavityExperiment& exp, double sigma_per_sqrt_m);

// Gaussian convolution: sqrt(fwhm_in^2 + (2 sqrt(2 ln 2) sigma)^2).
double broadened_fwhm(double fwhm_in_s, double sigma_s);

SensitivityFigure make_sensitivity_figure(std::string label, double time_resolution_s, double path_m);

// Built-in astrophysical (1 ms over 1e22 m) and laboratory (1 fs over 1e4 m)
// rows followed by `extra`.
std::vector<SensitivityFigure> sensitivity_table(const std::vector<SensitivityFigure>& extra = {});

}  // namespace vacuumleap
