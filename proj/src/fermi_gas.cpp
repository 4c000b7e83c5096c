#include "fermi_gas.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "quadrature.hpp"

namespace vacuumleap {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double phase_space_prefactor(const ModelConfig& cfg) {
  const double H = planck(cfg.phase_space_planck);
  return cfg.degeneracy_multiplier * kFourPi / (H * H * H);
}

void check_mu(const GasState& state) {
  if (!(std::fabs(state.mu) < 50.0 * state.cfg.kT()))
    throw DomainError("chemical potential must satisfy |mu| < 50 kT");
}

double cutoff_for(const GasState& state) { return 60.0 + std::fabs(state.mu) / state.cfg.kT(); }

std::string label(const char* what, const FermionSpecies& s) {
  return std::string(what) + "[" + s.name + "]";
}

}  // namespace

double pair_density_at(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  if (p < 0.0) throw DomainError("pair_density_at: momentum must be non-negative");
  const double eps = energy_of(p, species, cfg);
  return phase_space_prefactor(cfg) * p * p * fermi_factor(eps / cfg.kT());
}

double lepton_number_density(const GasState& state, const FermionSpecies& species) {
  check_mu(state);
  const ModelConfig& cfg = state.cfg;
  const double kT = cfg.kT();
  const double pref = phase_space_prefactor(cfg);
  const double mu = state.mu;
  auto f = [&](double p) {
    const double eps = energy_of(p, species, cfg);
    return pref * p * p * (fermi_factor((eps - mu) / kT) - fermi_factor((eps + mu) / kT));
  };
  return momentum_integral(f, cfg, label("lepton_number_density", species), cutoff_for(state)).value;
}

double pressure(const GasState& state, const FermionSpecies& species) {
  check_mu(state);
  const ModelConfig& cfg = state.cfg;
  const double kT = cfg.kT();
  const double pref = phase_space_prefactor(cfg);
  const double mu = state.mu;
  // ln(1 + e^{(mu - eps)/kT}) = log_one_plus_exp_neg((eps - mu)/kT)
  auto f = [&](double p) {
    const double eps = energy_of(p, species, cfg);
    return pref * p * p *
           (log_one_plus_exp_neg((eps - mu) / kT) + log_one_plus_exp_neg((eps + mu) / kT));
  };
  return kT * momentum_integral(f, cfg, label("pressure", species), cutoff_for(state)).value;
}

double grand_potential(const GasState& state, const FermionSpecies& species, double volume_m3) {
  return -pressure(state, species) * volume_m3;
}

double susceptibility_kernel(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  if (p < 0.0) throw DomainError("susceptibility_kernel: momentum must be non-negative");
  const double kT = cfg.kT();
  const double eps = energy_of(p, species, cfg);
  return 2.0 * phase_space_prefactor(cfg) * p * p * fermi_kernel(eps / kT) / kT;
}

double species_pair_density(const FermionSpecies& species, const ModelConfig& cfg) {
  auto f = [&](double p) { return pair_density_at(p, species, cfg); };
  return momentum_integral(f, cfg, label("pair_density", species)).value;
}

SpeciesDensities total_pair_density(const ModelConfig& cfg) {
  cfg.validate();
  SpeciesDensities out;
  out.per_species.reserve(cfg.catalog.size());
  for (const auto& s : cfg.catalog) {
    const double n = species_pair_density(s, cfg);
    out.per_species.push_back(n);
    out.total += n;
  }
  return out;
}

}  // namespace vacuumleap
