#pragma once

// Physical constants, the charged-fermion catalog and the switchable model
// conventions shared by every observable.

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace vacuumleap {

struct PhysicalConstants {
  // SI 2019 exact values.
  static constexpr double h = 6.62607015e-34;        // J s
  static constexpr double hbar = h / (2.0 * std::numbers::pi);
  static constexpr double c = 299792458.0;           // m/s
  static constexpr double e = 1.602176634e-19;       // C
  static constexpr double gev_to_joule = e * 1.0e9;  // J/GeV
  // CODATA 2018 magnetic constant.
  static constexpr double mu0_measured = 1.25663706212e-6;  // H/m
};

using Constants = PhysicalConstants;

struct FermionSpecies {
  std::string name;
  double charge_q = 1.0;    // |Q| in units of e
  double mass_gev = 0.0;    // rest mass, GeV/c^2
  int color_multiplicity = 1;
  int colour = 0;           // colour index of this expanded entry
};

// Expanded catalog: one entry per colour state.
struct SpeciesCatalog {
  std::vector<FermionSpecies> species;

  std::size_t size() const noexcept { return species.size(); }
  auto begin() const noexcept { return species.begin(); }
  auto end() const noexcept { return species.end(); }
  const FermionSpecies& operator[](std::size_t i) const { return species[i]; }

  double sum_charge_squared() const noexcept;
};

struct FamilyDefault {
  const char* name;
  double charge_q;
  double mass_gev;
  int color_multiplicity;
};

// The nine charged families (e, mu, tau, u, d, s, c, b, t) with PDG 2024
// central masses; quark masses are current masses.
const std::vector<FamilyDefault>& standard_families();

// Families expanded per colour state: 3 leptons + 6 quarks x 3 = 21 entries.
SpeciesCatalog standard_catalog();

void validate(const FermionSpecies& s);

enum class PlanckChoice { h, hbar };
enum class MassMode { physical, zero };
enum class MomentConvention { relativistic, nonrelativistic };

constexpr double planck(PlanckChoice p) noexcept {
  return p == PlanckChoice::h ? Constants::h : Constants::hbar;
}

struct ModelConfig {
  double temperature_gev = 246.22;
  MassMode mass_mode = MassMode::physical;
  PlanckChoice uncertainty_planck = PlanckChoice::h;
  PlanckChoice phase_space_planck = PlanckChoice::h;
  PlanckChoice moment_planck = PlanckChoice::h;
  MomentConvention moment_convention = MomentConvention::relativistic;
  double degeneracy_multiplier = 1.0;
  double quadrature_rel_tol = 1e-10;
  SpeciesCatalog catalog = standard_catalog();

  // kT in joules.
  double kT() const noexcept { return temperature_gev * Constants::gev_to_joule; }
  // Momentum scale kT/c used by the dimensionless substitution x = pc/kT.
  double momentum_scale() const noexcept { return kT() / Constants::c; }
  // Rest energy m c^2 in joules, honouring mass_mode.
  double rest_energy(const FermionSpecies& s) const noexcept {
    return mass_mode == MassMode::zero ? 0.0 : s.mass_gev * Constants::gev_to_joule;
  }

  // Throws InvalidArgument if any invariant is violated.
  void validate() const;
};

// sqrt((mc^2)^2 + (pc)^2); exactly p c in zero-mass mode.
double energy_of(double p, const FermionSpecies& species, const ModelConfig& cfg);

// x = H/p with H per uncertainty_planck.
double pair_size(double p, const ModelConfig& cfg);

// T = H/E with H per uncertainty_planck.
double pair_lifetime(double pair_energy, const ModelConfig& cfg);

}  // namespace vacuumleap
