#include "lab_predictions.hpp"

#include <cmath>

#include "error.hpp"
#include "photon_kinematics.hpp"

namespace vacuumleap {

void CavityExperiment::validate() const {
  if (!(cavity_length_m > 0.0) || !std::isfinite(cavity_length_m))
    throw InvalidArgument("cavity length must be positive");
  if (reflections < 1) throw InvalidArgument("cavity needs at least one reflection");
  if (!(pulse_fwhm_in_s >= 0.0) || !std::isfinite(pulse_fwhm_in_s))
    throw InvalidArgument("input pulse FWHM must be non-negative");
}

double predicted_sigma(const CavityExperiment& exp, const ModelConfig& cfg) {
  exp.validate();
  return predicted_sigma(exp, dispersion_coefficient(cfg));
}

double predicted_sigma(const CavityExperiment& exp, double sigma_per_sqrt_m) {
  exp.validate();
  return sigma_per_sqrt_m * std::sqrt(exp.effective_path_m());
}

double broadened_fwhm(double fwhm_in_s, double sigma_s) {
  if (!(fwhm_in_s >= 0.0) || !(sigma_s >= 0.0)) throw DomainError("broadened_fwhm: widths must be non-negative");
  return std::hypot(fwhm_in_s, kGaussianFwhmPerSigma * sigma_s);
}

SensitivityFigure make_sensitivity_figure(std::string label, double time_resolution_s, double path_m) {
  if (!(time_resolution_s > 0.0) || !(path_m > 0.0))
    throw InvalidArgument("sensitivity figure needs positive time resolution and path");
  SensitivityFigure f;
  f.label = std::move(label);
  f.time_resolution_s = time_resolution_s;
  f.path_m = path_m;
  f.figure_s_per_sqrt_m = time_resolution_s / std::sqrt(path_m);
  f.figure_fs_per_sqrt_m = f.figure_s_per_sqrt_m * 1e15;
  return f;
}

std::vector<SensitivityFigure> sensitivity_table(const std::vector<SensitivityFigure>& extra) {
  std::vector<SensitivityFigure> rows;
  rows.push_back(make_sensitivity_figure("astrophysical", 1e-3, 1e22));
  rows.push_back(make_sensitivity_figure("laboratory", 1e-15, 1e4));
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

}  // namespace vacuumleap
