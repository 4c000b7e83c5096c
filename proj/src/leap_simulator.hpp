#pragma once

// Monte Carlo photon propagation: each chain leaps from pair to pair until the
// path length is covered. A leap draws a species and momentum from the pair
// density, advances H/(4p) and dwells Uniform(0, T) with T = H/(2 eps), so
// the dwell has mean T/2 and standard deviation T/(2 sqrt 3).
//
// At ~1.7e18 leaps per metre only picometre-to-nanometre paths are feasible;
// the arrival-time spread is extrapolated to longer paths by sqrt(L).

#include <cmath>
#include <cstdint>
#include <vector>

#include "model.hpp"
#include "philox.hpp"
#include "sampler.hpp"

namespace vacuumleap {

struct SimulationPlan {
  double path_length_m = 1e-12;
  std::uint64_t seed = 1;
  int chains = 200;
  std::uint64_t max_steps = 100'000'000;  // per chain
  double photon_energy_j = 0.0;
  // Apply eps -> eps + eps_gamma/2 to leap length and dwell, mirroring
  // average_speed. Off by default, as in the dispersion derivation.
  bool energy_shifted = false;
  int threads = 0;  // 0 = hardware concurrency
  ModelConfig cfg;

  void validate() const;
};

struct Leap {
  double length_m;
  double dwell_s;
};

struct SimulationResult {
  double path_length_m = 0.0;
  int chains = 0;
  std::uint64_t total_steps = 0;     // all chains
  double total_time_s = 0.0;         // sum of arrival times over chains
  double total_length_m = 0.0;       // sum of covered lengths over chains
  std::vector<double> arrival_times_s;
  std::vector<std::uint64_t> steps_per_chain;

  double mean_arrival_time_s = 0.0;
  double mean_time_standard_error_s = 0.0;
  double empirical_sigma_s = 0.0;    // sample std of arrival times
  double standard_error_s = 0.0;     // standard error of empirical_sigma_s
  double mean_speed_mps = 0.0;       // path_length / mean arrival time
  double mean_speed_standard_error_mps = 0.0;
  double mean_steps_per_chain = 0.0;
  double steps_standard_error = 0.0;

  // empirical_sigma * sqrt(target / path_length)
  double extrapolated_sigma(double target_length_m) const;
};

// Per-leap constants shared by every chain.
class LeapKernel {
public:
  LeapKernel(const SamplerTables& tables, const ModelConfig& cfg, double photon_energy_j, bool energy_shifted);

  template <class Rng>
  Leap draw(Rng& rng) const noexcept {
    const std::size_t i = tables_->pick_species(rng.uniform());
    const double x = tables_->table_for(i).quantile(rng.uniform());
    const double a = tables_->rest_ratio[i];
    const double u = rng.uniform();
    if (!shifted_) {
      const double e = a == 0.0 ? x : std::sqrt(x * x + a * a);
      return {length_scale_ / x, u * dwell_scale_ / e};
    }
    // energies in units of kT
    const double e = (a == 0.0 ? x : std::sqrt(x * x + a * a)) + half_gamma_;
    const double pc = a == 0.0 ? e : std::sqrt((e - a) * (e + a));
    return {length_scale_ / pc, u * dwell_scale_ / e};
  }

private:
  const SamplerTables* tables_;
  double length_scale_;  // H c / (4 kT): leap length = length_scale / (pc/kT)
  double dwell_scale_;   // H / (2 kT):   T = dwell_scale / (eps/kT)
  double half_gamma_;
  bool shifted_;
};

SimulationResult simulate(const SimulationPlan& plan);
SimulationResult simulate(const SimulationPlan& plan, const SamplerTables& tables);

}  // namespace vacuumleap
