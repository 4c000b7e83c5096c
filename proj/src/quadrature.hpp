#pragma once

// Adaptive Gauss-Kronrod (7/15) integration over the dimensionless momentum
// variable x = pc/kT on [0, cutoff]. Every integrand in this project carries
// a Fermi factor and decays at least like exp(-x), so a cutoff of 60 leaves a
// truncation error below 1e-20 relative.

#include <functional>
#include <string>

#include "model.hpp"

namespace vacuumleap {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

struct IntegralSpec {
  std::function<double(double)> integrand;  // of dimensionless x >= 0
  double rel_tol = 1e-10;
  double abs_tol = 1e-30;
  double cutoff = 60.0;
  std::string label = "integral";
};

// Each initial panel may be bisected at most this many times.
inline constexpr int kMaxBisectionDepth = 40;
inline constexpr int kMaxSubintervals = 5000;

// Throws QuadratureError (with best estimate) on non-convergence.
QuadratureResult integrate_semi_infinite(const IntegralSpec& spec);

// Integrates f(p) over p in [0, inf) in SI units via x = pc/kT; the result
// includes the Jacobian kT/c.
QuadratureResult momentum_integral(const std::function<double(double)>& f, const ModelConfig& cfg,
                                   const std::string& label = "momentum integral", double cutoff = 60.0);

// Numerically stable Fermi-type factors of y = energy/kT.

// 1/(e^y + 1)
inline double fermi_factor(double y) noexcept;
// e^y/(e^y + 1)^2, the derivative -d/dy of fermi_factor.
inline double fermi_kernel(double y) noexcept;
// ln(1 + e^{-y})
inline double log_one_plus_exp_neg(double y) noexcept;

}  // namespace vacuumleap

#include <cmath>

namespace vacuumleap {

// Switch point y = 0: for y > 0 the complement form avoids e^y overflow.
inline double fermi_factor(double y) noexcept {
  if (y > 0.0) {
    const double t = std::exp(-y);
    return t / (1.0 + t);
  }
  return 1.0 / (1.0 + std::exp(y));
}

inline double fermi_kernel(double y) noexcept {
  const double t = std::exp(-std::fabs(y));
  const double d = 1.0 + t;
  return t / (d * d);
}

inline double log_one_plus_exp_neg(double y) noexcept {
  if (y > 0.0) return std::log1p(std::exp(-y));
  return -y + std::log1p(std::exp(y));
}

}  // namespace vacuumleap
