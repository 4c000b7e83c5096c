#pragma once

// Magnetic and electric response of the virtual-pair gas:
//
//   1/mu0 = sum_i (2/3) Int beta_i(eps)^2     K_i(p) dp
//   eps0  = sum_i (2/3) Int (omega_i(p)/2)^2 K_i(p) dp
//
// where K_i is susceptibility_kernel (dn/dmu at mu = 0). beta is the
// Bohr-magneton analogue with m c^2 replaced by the fermion energy, written
// in SI as Q e H c^2 / (2 eps); omega = Q e H / p is the pair dipole.
// In zero-mass mode beta = (omega/2) c exactly, hence c_derived = c.

#include <vector>

#include "model.hpp"

namespace vacuumleap {

struct VacuumConstants {
  double inv_mu0 = 0.0;   // m/H
  double mu0 = 0.0;       // H/m
  double epsilon0 = 0.0;  // F/m
  double c_derived = 0.0; // m/s
  double ratio_to_measured = 0.0;  // mu0 / mu0_measured
  std::vector<double> per_species_inv_mu0;   // m/H, catalog order
  std::vector<double> per_species_epsilon0;  // F/m, catalog order
};

// J/T. Relativistic: Q e H c^2 / (2 eps). Nonrelativistic: Q e H / (2 m).
double magnetic_moment(double eps, const FermionSpecies& species, const ModelConfig& cfg);

// C m. omega = Q e H / p, H per moment_planck.
double dipole_moment(double p, const FermionSpecies& species, const ModelConfig& cfg);

double species_inverse_mu0(const FermionSpecies& species, const ModelConfig& cfg);
double species_epsilon0(const FermionSpecies& species, const ModelConfig& cfg);

double inverse_mu0(const ModelConfig& cfg);
double epsilon0(const ModelConfig& cfg);

// 1/sqrt(mu0 eps0) from the model values.
double derived_light_speed(const ModelConfig& cfg);

VacuumConstants vacuum_constants(const ModelConfig& cfg);

}  // namespace vacuumleap
