#pragma once

// Grand-canonical statistics of the virtual-pair gas. Densities use the
// single antiparallel-spin state per level (no factor 2 for spin) and are
// scaled by ModelConfig::degeneracy_multiplier.

#include <vector>

#include "model.hpp"

namespace vacuumleap {

struct GasState {
  ModelConfig cfg;
  double mu = 0.0;  // chemical potential, J
};

struct SpeciesDensities {
  std::vector<double> per_species;  // 1/m^3, catalog order
  double total = 0.0;
};

// n_pair(p) = g (4 pi p^2 / H^3) / (e^{eps/kT} + 1), H per phase_space_planck.
double pair_density_at(double p, const FermionSpecies& species, const ModelConfig& cfg);

// Particle-minus-antiparticle density (lepton-number density), 1/m^3.
double lepton_number_density(const GasState& state, const FermionSpecies& species);

// P = P+ + P-, Pa.
double pressure(const GasState& state, const FermionSpecies& species);

// Omega = -P V.
double grand_potential(const GasState& state, const FermionSpecies& species, double volume_m3);

// d n(p) / d mu at mu = 0, particle + antiparticle terms:
// g (2 * 4 pi p^2 / H^3) (1/kT) e^{eps/kT} / (e^{eps/kT} + 1)^2.
double susceptibility_kernel(double p, const FermionSpecies& species, const ModelConfig& cfg);

// Integral of n_pair over p for one species.
double species_pair_density(const FermionSpecies& species, const ModelConfig& cfg);

SpeciesDensities total_pair_density(const ModelConfig& cfg);

}  // namespace vacuumleap
