#include <cmath>
#include <numbers>

#include "doctest.h"
#include "error.hpp"
#include "fermi_gas.hpp"
#include "oracle.hpp"

using namespace vacuumleap;

namespace {

ModelConfig massless() {
  ModelConfig cfg;
  cfg.mass_mode = MassMode::zero;
  return cfg;
}

double cube(double v) { return v * v * v; }

oracle::Setup oracle_setup(const ModelConfig& cfg) {
  oracle::Setup s;
  s.kT_gev = cfg.temperature_gev;
  for (const auto& f : standard_families()) s.fermions.push_back({f.charge_q, f.mass_gev, f.color_multiplicity});
  return s;
}

}  // namespace

TEST_CASE("massless pair density closed form") {
  const auto cfg = massless();
  const double expected = 4 * std::numbers::pi / cube(Constants::h) * cube(cfg.kT() / Constants::c) * 1.8030853547393952;
  for (const auto& s : cfg.catalog) CHECK(species_pair_density(s, cfg) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(total_pair_density(cfg).total == doctest::Approx(21 * expected).epsilon(1e-10));
}

TEST_CASE("pair density matches the oracle with physical masses") {
  const ModelConfig cfg;
  const double ref = oracle::density_moment(oracle_setup(cfg), [](double, double) { return 1.0; });
  CHECK(total_pair_density(cfg).total == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("heavier species are rarer") {
  const ModelConfig cfg;
  const auto d = total_pair_density(cfg);
  for (std::size_t i = 0; i < cfg.catalog.size(); ++i)
    for (std::size_t j = 0; j < cfg.catalog.size(); ++j)
      if (cfg.catalog[i].mass_gev < cfg.catalog[j].mass_gev) CHECK(d.per_species[i] > d.per_species[j]);
}

TEST_CASE("degeneracy multiplier scales densities") {
  ModelConfig a;
  ModelConfig b;
  b.degeneracy_multiplier = 4;
  CHECK(total_pair_density(b).total == doctest::Approx(4 * total_pair_density(a).total).epsilon(1e-12));
}

TEST_CASE("hbar phase space cell") {
  ModelConfig a = massless();
  ModelConfig b = massless();
  b.phase_space_planck = PlanckChoice::hbar;
  CHECK(total_pair_density(b).total / total_pair_density(a).total ==
        doctest::Approx(cube(2 * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("lepton number vanishes at zero chemical potential and is odd") {
  const ModelConfig cfg;
  const auto& muon = cfg.catalog[1];
  CHECK(lepton_number_density({cfg, 0.0}, muon) == 0.0);
  const double mu = 0.7 * cfg.kT();
  CHECK(lepton_number_density({cfg, -mu}, muon) ==
        doctest::Approx(-lepton_number_density({cfg, mu}, muon)).epsilon(1e-12));
  CHECK(lepton_number_density({cfg, mu}, muon) > 0);
}

TEST_CASE("massless pressure closed form") {
  const auto cfg = massless();
  const double kT = cfg.kT();
  const double expected =
      2 * kT * 4 * std::numbers::pi / cube(Constants::h) * cube(kT / Constants::c) * 7 * std::pow(std::numbers::pi, 4) / 360;
  CHECK(pressure({cfg, 0.0}, cfg.catalog[0]) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(grand_potential({cfg, 0.0}, cfg.catalog[0], 2.0) == doctest::Approx(-2 * expected).epsilon(1e-10));
}

TEST_CASE("pressure derivative is the lepton number density") {
  ModelConfig cfg;
  cfg.quadrature_rel_tol = 1e-13;
  const auto& electron = cfg.catalog[0];
  const double kT = cfg.kT();
  for (double m : {-3.0, -0.4, 0.25, 1.5, 8.0}) {
    CAPTURE(m);
    const double mu = m * kT;
    const double step = 1e-4 * kT;
    const double dp = (pressure({cfg, mu + step}, electron) - pressure({cfg, mu - step}, electron)) / (2 * step);
    CHECK(dp == doctest::Approx(lepton_number_density({cfg, mu}, electron)).epsilon(1e-7));
  }
}

TEST_CASE("pressure grows with chemical potential magnitude") {
  const ModelConfig cfg;
  const auto& e = cfg.catalog[0];
  const double kT = cfg.kT();
  double last = pressure({cfg, 0.0}, e);
  for (double m : {0.5, 1.0, 2.0, 4.0}) {
    const double p = pressure({cfg, m * kT}, e);
    CHECK(p > last);
    CHECK(pressure({cfg, -m * kT}, e) == doctest::Approx(p).epsilon(1e-12));
    last = p;
  }
}

TEST_CASE("susceptibility kernel is the chemical potential derivative") {
  const ModelConfig cfg;
  const auto& tau = cfg.catalog[2];
  const double kT = cfg.kT();
  for (double x : {0.01, 0.5, 2.0, 7.0}) {
    const double p = x * cfg.momentum_scale();
    const double eps = energy_of(p, tau, cfg);
    const double dmu = 1e-5 * kT;
    // particle minus antiparticle density at momentum p
    const double cell = pair_density_at(p, tau, cfg) / oracle::occupation(eps / kT);
    auto net = [&](double mu) {
      return cell * (oracle::occupation((eps - mu) / kT) - oracle::occupation((eps + mu) / kT));
    };
    CHECK(susceptibility_kernel(p, tau, cfg) == doctest::Approx((net(dmu) - net(-dmu)) / (2 * dmu)).epsilon(1e-7));
  }
}

TEST_CASE("domain errors") {
  const ModelConfig cfg;
  const auto& e = cfg.catalog[0];
  CHECK_THROWS_AS(pair_density_at(-1.0, e, cfg), DomainError);
  CHECK_THROWS_AS(susceptibility_kernel(-1.0, e, cfg), DomainError);
  CHECK_THROWS_AS(pressure({cfg, 60 * cfg.kT()}, e), DomainError);
  CHECK_THROWS_AS(lepton_number_density({cfg, -55 * cfg.kT()}, e), DomainError);
  CHECK(pair_density_at(0.0, e, cfg) == 0.0);
}
