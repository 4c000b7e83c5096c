#include "vacuum_response.hpp"

#include <cmath>

#include "error.hpp"
#include "fermi_gas.hpp"
#include "quadrature.hpp"

namespace vacuumleap {

double magnetic_moment(double eps, const FermionSpecies& species, const ModelConfig& cfg) {
  const double H = planck(cfg.moment_planck);
  const double qe = species.charge_q * Constants::e;
  if (cfg.moment_convention == MomentConvention::nonrelativistic) {
    if (cfg.mass_mode == MassMode::zero)
      throw DomainError("nonrelativistic magnetic moment is singular for zero fermion masses");
    const double mass_kg = cfg.rest_energy(species) / (Constants::c * Constants::c);
    return qe * H / (2.0 * mass_kg);
  }
  if (!(eps > 0.0)) throw DomainError("magnetic_moment: energy must be positive");
  return qe * H * Constants::c * Constants::c / (2.0 * eps);
}

double dipole_moment(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("dipole_moment: momentum must be positive");
  return species.charge_q * Constants::e * planck(cfg.moment_planck) / p;
}

double species_inverse_mu0(const FermionSpecies& species, const ModelConfig& cfg) {
  auto f = [&](double p) {
    const double beta = magnetic_moment(energy_of(p, species, cfg), species, cfg);
    return beta * beta * susceptibility_kernel(p, species, cfg);
  };
  return 2.0 / 3.0 * momentum_integral(f, cfg, "inverse_mu0[" + species.name + "]").value;
}

double species_epsilon0(const FermionSpecies& species, const ModelConfig& cfg) {
  auto f = [&](double p) {
    const double half_omega = 0.5 * dipole_moment(p, species, cfg);
    return half_omega * half_omega * susceptibility_kernel(p, species, cfg);
  };
  return 2.0 / 3.0 * momentum_integral(f, cfg, "epsilon0[" + species.name + "]").value;
}

double inverse_mu0(const ModelConfig& cfg) {
  cfg.validate();
  double sum = 0.0;
  for (const auto& s : cfg.catalog) sum += species_inverse_mu0(s, cfg);
  return sum;
}

double epsilon0(const ModelConfig& cfg) {
  cfg.validate();
  double sum = 0.0;
  for (const auto& s : cfg.catalog) sum += species_epsilon0(s, cfg);
  return sum;
}

double derived_light_speed(const ModelConfig& cfg) {
  return std::sqrt(inverse_mu0(cfg) / epsilon0(cfg));
}

VacuumConstants vacuum_constants(const ModelConfig& cfg) {
  cfg.validate();
  VacuumConstants vc;
  vc.per_species_inv_mu0.reserve(cfg.catalog.size());
  vc.per_species_epsilon0.reserve(cfg.catalog.size());
  for (const auto& s : cfg.catalog) {
    vc.per_species_inv_mu0.push_back(species_inverse_mu0(s, cfg));
    vc.per_species_epsilon0.push_back(species_epsilon0(s, cfg));
    vc.inv_mu0 += vc.per_species_inv_mu0.back();
    vc.epsilon0 += vc.per_species_epsilon0.back();
  }
  vc.mu0 = 1.0 / vc.inv_mu0;
  vc.c_derived = std::sqrt(vc.inv_mu0 / vc.epsilon0);
  vc.ratio_to_measured = vc.mu0 / Constants::mu0_measured;
  return vc;
}

}  // namespace vacuumleap
