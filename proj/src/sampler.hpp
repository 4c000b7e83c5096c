#pragma once

// Inverse-CDF sampling of species and momentum from the pair density.
//
// For one species the momentum density in x = pc/kT is proportional to
// x^2 / (e^{sqrt(x^2 + a^2)} + 1), a = mc^2/kT. Its quantile function is
// tabulated on two branches so that both ends stay smooth:
//   lower, u <= 1/2:  x as a function of t = u^{1/3}      (C ~ x^3 near 0)
//   upper, u >  1/2:  x as a function of s = -ln(1 - u)   (1 - C ~ e^{-x})
// Knots are uniform in t and s; values between knots use monotone cubic
// Hermite interpolation with exact slopes from the density.

#include <cstddef>
#include <memory>
#include <vector>

#include "model.hpp"

namespace vacuumleap {

class MomentumTable {
public:
  static constexpr int kKnotsPerBranch = 4096;

  explicit MomentumTable(double rest_ratio);

  double rest_ratio() const noexcept { return a_; }
  // Normalisation Int_0^inf x^2 F(sqrt(x^2 + a^2)) dx.
  double total() const noexcept { return total_; }

  // Unnormalised density in x.
  double density(double x) const noexcept;
  // Normalised CDF evaluated from the fine integration grid.
  double cdf(double x) const;
  // Inverse CDF for u in (0, 1).
  double quantile(double u) const noexcept;

  // Knot x-values of both branches in increasing order.
  std::vector<double> knots() const;

private:
  struct Branch {
    double step = 0.0;    // knot spacing in t (lower) or s (upper)
    double origin = 0.0;  // t or s at knot 0
    std::vector<double> x;
    std::vector<double> slope;  // dx/dt or dx/ds, Fritsch-Carlson limited
    double eval(double v) const noexcept;
  };

  double lower_cdf_raw(double x, std::size_t cell) const noexcept;
  double upper_tail_raw(double x, std::size_t cell) const noexcept;
  double solve_lower(double target) const;
  double solve_upper(double target) const;

  double a_;
  double total_ = 0.0;
  double grid_step_ = 0.0;
  std::vector<double> cumulative_;  // Int_0^{x_j}, unnormalised
  std::vector<double> tail_;        // Int_{x_j}^inf, unnormalised
  Branch lower_;
  Branch upper_;
};

struct SamplerTables {
  std::vector<double> species_cdf;   // cumulative excitation probability, catalog order
  std::vector<double> species_weight;
  std::vector<double> rest_ratio;    // a_i = m_i c^2 / kT
  std::vector<std::size_t> table_of; // species -> tables index
  std::vector<std::shared_ptr<const MomentumTable>> tables;
  // Walker alias table equivalent to species_cdf.
  std::vector<double> alias_threshold;
  std::vector<std::size_t> alias_index;

  // O(1) draw from the excitation probabilities; u uniform on (0, 1).
  std::size_t pick_species(double u) const noexcept {
    const double scaled = u * static_cast<double>(alias_threshold.size());
    auto i = static_cast<std::size_t>(scaled);
    if (i >= alias_threshold.size()) i = alias_threshold.size() - 1;
    return scaled - static_cast<double>(i) < alias_threshold[i] ? i : alias_index[i];
  }
  const MomentumTable& table_for(std::size_t species) const { return *tables[table_of[species]]; }
};

// Species weights are proportional to Int n_i dp; tables are shared between
// species with equal rest energy.
SamplerTables build_sampler(const ModelConfig& cfg);

}  // namespace vacuumleap
