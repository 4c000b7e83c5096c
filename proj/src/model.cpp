#include "model.hpp"

#include <cmath>

#include "error.hpp"

namespace vacuumleap {

const std::vector<FamilyDefault>& standard_families() {
  static const std::vector<FamilyDefault> families = {
      {"e", 1.0, 0.51099895e-3, 1},
      {"mu", 1.0, 0.1056583755, 1},
      {"tau", 1.0, 1.77693, 1},
      {"u", 2.0 / 3.0, 2.16e-3, 3},
      {"d", 1.0 / 3.0, 4.70e-3, 3},
      {"s", 1.0 / 3.0, 93.5e-3, 3},
      {"c", 2.0 / 3.0, 1.2730, 3},
      {"b", 1.0 / 3.0, 4.183, 3},
      {"t", 2.0 / 3.0, 172.57, 3},
  };
  return families;
}

SpeciesCatalog standard_catalog() {
  SpeciesCatalog cat;
  cat.species.reserve(21);
  for (const auto& f : standard_families()) {
    for (int k = 0; k < f.color_multiplicity; ++k)
      cat.species.push_back({f.name, f.charge_q, f.mass_gev, f.color_multiplicity, k});
  }
  return cat;
}

double SpeciesCatalog::sum_charge_squared() const noexcept {
  double sum = 0.0;
  for (const auto& s : species) sum += s.charge_q * s.charge_q;
  return sum;
}

void validate(const FermionSpecies& s) {
  if (!(s.charge_q > 0.0) || !std::isfinite(s.charge_q))
    throw InvalidArgument("species '" + s.name + "': charge must be positive");
  if (!(s.mass_gev > 0.0) || !std::isfinite(s.mass_gev))
    throw InvalidArgument("species '" + s.name + "': mass_gev must be positive");
  if (s.color_multiplicity != 1 && s.color_multiplicity != 3)
    throw InvalidArgument("species '" + s.name + "': colour multiplicity must be 1 or 3");
}

void ModelConfig::validate() const {
  if (!(temperature_gev > 0.0) || !std::isfinite(temperature_gev))
    throw InvalidArgument("temperature_gev must be positive");
  if (!(degeneracy_multiplier > 0.0) || !std::isfinite(degeneracy_multiplier))
    throw InvalidArgument("degeneracy_multiplier must be positive");
  if (!(quadrature_rel_tol > 0.0) || quadrature_rel_tol > 1e-4)
    throw InvalidArgument("quadrature_rel_tol must lie in (0, 1e-4]");
  if (catalog.species.empty()) throw InvalidArgument("species catalog is empty");
  for (const auto& s : catalog) vacuumleap::validate(s);
}

double energy_of(double p, const FermionSpecies& species, const ModelConfig& cfg) {
  if (p < 0.0) throw DomainError("energy_of: momentum must be non-negative");
  const double pc = p * Constants::c;
  if (cfg.mass_mode == MassMode::zero) return pc;
  return std::hypot(cfg.rest_energy(species), pc);
}

double pair_size(double p, const ModelConfig& cfg) {
  if (!(p > 0.0)) throw DomainError("pair_size: momentum must be positive (size diverges at p = 0)");
  return planck(cfg.uncertainty_planck) / p;
}

double pair_lifetime(double pair_energy, const ModelConfig& cfg) {
  if (!(pair_energy > 0.0)) throw DomainError("pair_lifetime: pair energy must be positive");
  return planck(cfg.uncertainty_planck) / pair_energy;
}

}  // namespace vacuumleap
