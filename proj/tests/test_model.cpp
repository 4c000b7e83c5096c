#include <cmath>
#include <numbers>

#include "doctest.h"
#include "error.hpp"
#include "model.hpp"
#include "units.hpp"

using namespace vacuumleap;

TEST_CASE("catalog expands colours") {
  const auto cat = standard_catalog();
  CHECK(standard_families().size() == 9);
  CHECK(cat.size() == 21);
  int quarks = 0;
  for (const auto& s : cat) quarks += s.color_multiplicity == 3;
  CHECK(quarks == 18);
  // 3 leptons + 9 up-type (4/9) + 9 down-type (1/9)
  CHECK(cat.sum_charge_squared() == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("default config") {
  const ModelConfig cfg;
  CHECK(cfg.temperature_gev == 246.22);
  CHECK(cfg.kT() == doctest::Approx(246.22 * 1.602176634e-10).epsilon(1e-15));
  CHECK(cfg.momentum_scale() == doctest::Approx(cfg.kT() / 299792458.0).epsilon(1e-15));
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("hbar is h over two pi") {
  CHECK(Constants::hbar * 2 * std::numbers::pi == doctest::Approx(Constants::h).epsilon(1e-15));
  CHECK(planck(PlanckChoice::hbar) == Constants::hbar);
}

TEST_CASE("energy_of") {
  ModelConfig cfg;
  const auto& electron = cfg.catalog[0];
  const double mc2 = electron.mass_gev * Constants::gev_to_joule;
  SUBCASE("rest energy at zero momentum") { CHECK(energy_of(0.0, electron, cfg) == doctest::Approx(mc2)); }
  SUBCASE("relativistic limit") {
    const double p = 1e6 * mc2 / Constants::c;
    CHECK(energy_of(p, electron, cfg) == doctest::Approx(p * Constants::c).epsilon(1e-11));
  }
  SUBCASE("zero mass mode drops the rest energy") {
    cfg.mass_mode = MassMode::zero;
    CHECK(energy_of(0.0, electron, cfg) == 0.0);
    CHECK(energy_of(2.0, electron, cfg) == 2.0 * Constants::c);
  }
  SUBCASE("negative momentum") { CHECK_THROWS_AS(energy_of(-1.0, electron, cfg), DomainError); }
}

TEST_CASE("uncertainty relation") {
  ModelConfig cfg;
  const double E = 1e-10;
  CHECK(pair_lifetime(E, cfg) * E == doctest::Approx(Constants::h).epsilon(1e-15));
  CHECK(pair_size(3e-18, cfg) * 3e-18 == doctest::Approx(Constants::h).epsilon(1e-15));
  cfg.uncertainty_planck = PlanckChoice::hbar;
  CHECK(pair_lifetime(E, cfg) * E == doctest::Approx(Constants::hbar).epsilon(1e-15));
  CHECK_THROWS_AS(pair_size(0.0, cfg), DomainError);
  CHECK_THROWS_AS(pair_lifetime(0.0, cfg), DomainError);
  CHECK_THROWS_AS(pair_lifetime(-1.0, cfg), DomainError);
}

TEST_CASE("validation rejects bad configs") {
  ModelConfig cfg;
  SUBCASE("temperature") {
    cfg.temperature_gev = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
  SUBCASE("degeneracy") {
    cfg.degeneracy_multiplier = -1;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
  SUBCASE("tolerance") {
    cfg.quadrature_rel_tol = 0.1;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
  SUBCASE("mass") {
    cfg.catalog.species[3].mass_gev = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
  SUBCASE("multiplicity") {
    cfg.catalog.species[0].color_multiplicity = 2;
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
  SUBCASE("empty catalog") {
    cfg.catalog.species.clear();
    CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  }
}

TEST_CASE("quantity parsing") {
  const double ev = 1.602176634e-19;
  CHECK(parse_quantity("100keV", QuantityKind::energy) == doctest::Approx(1e5 * ev));
  CHECK(parse_quantity("1 eV", QuantityKind::energy) == doctest::Approx(ev));
  CHECK(parse_quantity("2.5", QuantityKind::energy) == doctest::Approx(2.5e9 * ev));
  CHECK(parse_quantity("3J", QuantityKind::energy) == 3.0);
  CHECK(parse_quantity("50GeV", QuantityKind::energy) == doctest::Approx(50e9 * ev));
  CHECK(parse_quantity("4km", QuantityKind::length) == 4000.0);
  CHECK(parse_quantity("1e-12m", QuantityKind::length) == 1e-12);
  CHECK(parse_quantity("4fs", QuantityKind::time) == doctest::Approx(4e-15));
  CHECK(parse_quantity("1.9as", QuantityKind::time) == doctest::Approx(1.9e-18));
  CHECK_THROWS_AS(parse_quantity("4 parsecs", QuantityKind::length), InvalidArgument);
  CHECK_THROWS_AS(parse_quantity("4km", QuantityKind::time), InvalidArgument);
  CHECK_THROWS_AS(parse_quantity("", QuantityKind::time), InvalidArgument);
  CHECK_THROWS_AS(parse_quantity("fast", QuantityKind::time), InvalidArgument);
}
