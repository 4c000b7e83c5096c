#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "doctest.h"
#include "error.hpp"
#include "fermi_gas.hpp"
#include "philox.hpp"
#include "photon_kinematics.hpp"
#include "quadrature.hpp"
#include "sampler.hpp"

using namespace vacuumleap;

TEST_CASE("Philox4x32-10 known answers") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  std::set<double> seen;
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
    seen.insert(u);
    seen.insert(c.uniform());
    seen.insert(d.uniform());
  }
  CHECK(seen.size() == 3000);
}

TEST_CASE("uniform moments") {
  PhiloxStream rng(1, 0);
  const int n = 200000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    s += u;
    s2 += u * u;
  }
  CHECK(s / n == doctest::Approx(0.5).epsilon(5 * std::sqrt(1.0 / 12 / n) / 0.5));
  CHECK(s2 / n == doctest::Approx(1.0 / 3).epsilon(0.01));
}

TEST_CASE("momentum table normalisation") {
  const MomentumTable massless(0.0);
  CHECK(massless.total() == doctest::Approx(1.8030853547393952).epsilon(1e-10));
  CHECK(massless.cdf(0.0) == 0.0);
  CHECK(massless.cdf(1e3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(MomentumTable(-1.0), InvalidArgument);
}

TEST_CASE("quantile inverts the CDF") {
  for (double a : {0.0, 2e-6, 0.4, 7.0}) {
    CAPTURE(a);
    const MomentumTable t(a);
    double worst = 0;
    double last = 0;
    for (int k = 1; k < 4000; ++k) {
      const double u = k / 4000.0;
      const double x = t.quantile(u);
      CHECK(x >= last);
      last = x;
      worst = std::max(worst, std::fabs(t.cdf(x) - u) / std::min(u, 1 - u));
    }
    for (double u : {1e-9, 1e-6, 1 - 1e-6, 1 - 1e-12}) {
      const double x = t.quantile(u);
      worst = std::max(worst, std::fabs(t.cdf(x) - u) / std::min(u, 1 - u));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("sampled momenta follow the density") {
  for (double a : {0.0, 3.0}) {
    CAPTURE(a);
    const MomentumTable t(a);
    PhiloxStream rng(11, static_cast<std::uint64_t>(a));
    const int bins = 20;
    const int n = 200000;
    std::vector<int> counts(bins, 0);
    double sum_x = 0, sum_x2 = 0;
    for (int i = 0; i < n; ++i) {
      const double x = t.quantile(rng.uniform());
      sum_x += x;
      sum_x2 += x * x;
      ++counts[std::min(bins - 1, static_cast<int>(t.cdf(x) * bins))];
    }
    double chi2 = 0;
    for (int c : counts) chi2 += (c - n / double(bins)) * (c - n / double(bins)) / (n / double(bins));
    CHECK(chi2 < 43.8);  // 99.9% point, 19 degrees of freedom

    // mean momentum: Int x^3 F / Int x^2 F
    IntegralSpec spec;
    spec.integrand = [&](double x) { return x * t.density(x); };
    const double mean = integrate_semi_infinite(spec).value / t.total();
    const double var = sum_x2 / n - (sum_x / n) * (sum_x / n);
    CHECK(std::fabs(sum_x / n - mean) < 5 * std::sqrt(var / n));
  }
}

TEST_CASE("alias table reproduces excitation probabilities") {
  const ModelConfig cfg;
  const auto tables = build_sampler(cfg);
  const auto w = species_probabilities(cfg);
  const std::size_t n = tables.alias_threshold.size();
  REQUIRE(n == cfg.catalog.size());
  std::vector<double> implied(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    implied[i] += tables.alias_threshold[i] / n;
    implied[tables.alias_index[i]] += (1 - tables.alias_threshold[i]) / n;
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(implied[i] == doctest::Approx(w[i]).epsilon(1e-12));
    CHECK(tables.species_weight[i] == doctest::Approx(w[i]).epsilon(1e-12));
  }
  CHECK(tables.species_cdf.back() == doctest::Approx(1.0).epsilon(1e-14));
  // colours share a table
  CHECK(tables.tables.size() == 9);
  CHECK(&tables.table_for(3) == &tables.table_for(4));
  CHECK(tables.rest_ratio[0] == doctest::Approx(0.51099895e-3 / 246.22));
}

TEST_CASE("massless sampler uses a single table") {
  ModelConfig cfg;
  cfg.mass_mode = MassMode::zero;
  const auto tables = build_sampler(cfg);
  CHECK(tables.tables.size() == 1);
  PhiloxStream rng(3, 0);
  std::vector<int> counts(21, 0);
  for (int i = 0; i < 21000; ++i) ++counts[tables.pick_species(rng.uniform())];
  for (int c : counts) CHECK(std::abs(c - 1000) < 160);
}
