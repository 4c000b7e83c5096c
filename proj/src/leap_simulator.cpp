#include "leap_simulator.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "error.hpp"
#include "photon_kinematics.hpp"

namespace vacuumleap {

void SimulationPlan::validate() const {
  if (!(path_length_m > 0.0) || !std::isfinite(path_length_m))
    throw InvalidArgument("simulation path length must be positive");
  if (chains < 1) throw InvalidArgument("simulation needs at least one chain");
  if (max_steps < 1000) throw InvalidArgument("max_steps must be at least 1000");
  if (!(photon_energy_j >= 0.0) || !std::isfinite(photon_energy_j))
    throw InvalidArgument("photon energy must be non-negative");
  if (threads < 0) throw InvalidArgument("thread count must be non-negative");
  cfg.validate();
}

double SimulationResult::extrapolated_sigma(double target_length_m) const {
  if (!(target_length_m > 0.0)) throw DomainError("extrapolation target length must be positive");
  if (target_length_m == path_length_m) return empirical_sigma_s;
  return empirical_sigma_s * std::sqrt(target_length_m / path_length_m);
}

LeapKernel::LeapKernel(const SamplerTables& tables, const ModelConfig& cfg, double photon_energy_j,
                       bool energy_shifted)
    : tables_(&tables),
      length_scale_(planck(cfg.uncertainty_planck) * Constants::c / (4.0 * cfg.kT())),
      dwell_scale_(planck(cfg.uncertainty_planck) / (2.0 * cfg.kT())),
      half_gamma_(0.5 * photon_energy_j / cfg.kT()),
      shifted_(energy_shifted) {}

namespace {

struct ChainOutcome {
  double time = 0.0;
  double length = 0.0;
  std::uint64_t steps = 0;
};

ChainOutcome run_chain(const LeapKernel& kernel, const SimulationPlan& plan, std::uint64_t chain) {
  PhiloxStream rng(plan.seed, chain);
  ChainOutcome out;
  double remaining = plan.path_length_m;
  double covered = 0.0;
  for (;;) {
    const Leap leap = kernel.draw(rng);
    ++out.steps;
    if (leap.length_m >= remaining) {
      // prorate the final leap
      out.time += leap.dwell_s * (remaining / leap.length_m);
      covered += remaining;
      break;
    }
    remaining -= leap.length_m;
    covered += leap.length_m;
    out.time += leap.dwell_s;
    if (out.steps >= plan.max_steps) {
      std::ostringstream msg;
      msg << "chain " << chain << " exceeded max_steps = " << plan.max_steps << " after covering " << covered
          << " m of " << plan.path_length_m << " m; reduce path_length below " << covered << " m";
      throw StepLimitError(msg.str(), covered);
    }
  }
  out.length = covered;
  return out;
}

}  // namespace

SimulationResult simulate(const SimulationPlan& plan) {
  plan.validate();
  const double expected_steps = steps_per_length(plan.cfg) * plan.path_length_m;
  if (expected_steps > static_cast<double>(plan.max_steps)) {
    const double max_length = plan.path_length_m * static_cast<double>(plan.max_steps) / expected_steps;
    std::ostringstream msg;
    msg << "path_length " << plan.path_length_m << " m needs ~" << expected_steps
        << " leaps per chain, above max_steps = " << plan.max_steps << "; reduce path_length to at most "
        << max_length << " m";
    throw StepLimitError(msg.str(), max_length);
  }
  const SamplerTables tables = build_sampler(plan.cfg);
  return simulate(plan, tables);
}

SimulationResult simulate(const SimulationPlan& plan, const SamplerTables& tables) {
  plan.validate();
  const LeapKernel kernel(tables, plan.cfg, plan.photon_energy_j, plan.energy_shifted);
  const auto chains = static_cast<std::size_t>(plan.chains);
  std::vector<ChainOutcome> outcomes(chains);

  unsigned workers = plan.threads > 0 ? static_cast<unsigned>(plan.threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chains)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chains || failed.load()) return;
      try {
        outcomes[c] = run_chain(kernel, plan, c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  // Aggregate in chain order so results do not depend on scheduling.
  SimulationResult r;
  r.path_length_m = plan.path_length_m;
  r.chains = plan.chains;
  r.arrival_times_s.reserve(chains);
  r.steps_per_chain.reserve(chains);
  for (const auto& o : outcomes) {
    r.total_steps += o.steps;
    r.total_time_s += o.time;
    r.total_length_m += o.length;
    r.arrival_times_s.push_back(o.time);
    r.steps_per_chain.push_back(o.steps);
  }
  const double n = static_cast<double>(chains);
  r.mean_arrival_time_s = r.total_time_s / n;
  r.mean_steps_per_chain = static_cast<double>(r.total_steps) / n;
  if (chains > 1) {
    double ss_time = 0.0;
    double ss_steps = 0.0;
    for (const auto& o : outcomes) {
      const double dt = o.time - r.mean_arrival_time_s;
      const double ds = static_cast<double>(o.steps) - r.mean_steps_per_chain;
      ss_time += dt * dt;
      ss_steps += ds * ds;
    }
    r.empirical_sigma_s = std::sqrt(ss_time / (n - 1.0));
    r.standard_error_s = r.empirical_sigma_s / std::sqrt(2.0 * (n - 1.0));
    r.mean_time_standard_error_s = r.empirical_sigma_s / std::sqrt(n);
    r.steps_standard_error = std::sqrt(ss_steps / (n - 1.0)) / std::sqrt(n);
  }
  r.mean_speed_mps = plan.path_length_m / r.mean_arrival_time_s;
  r.mean_speed_standard_error_mps = r.mean_speed_mps * r.mean_time_standard_error_s / r.mean_arrival_time_s;
  return r;
}

}  // namespace vacuumleap
