#include "sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "error.hpp"
#include "quadrature.hpp"

namespace vacuumleap {
namespace {

constexpr double kGridStep = 0.005;
constexpr double kGridEnd = 80.0;
constexpr double kUpperEnd = 40.0;  // s = -ln(1-u) never exceeds ~37.4 for 53-bit u

// 15-point Gauss-Kronrod on [a, b]; on cells this short it is exact to rounding.
template <class F>
double gk15(const F& f, double a, double b) {
  static constexpr std::array<double, 8> x = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static constexpr std::array<double, 8> w = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = w[7] * f(c);
  for (int j = 0; j < 7; ++j) sum += w[j] * (f(c - h * x[j]) + f(c + h * x[j]));
  return sum * h;
}

void limit_slopes(std::vector<double>& xs, std::vector<double>& d, double step) {
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double secant = (xs[k + 1] - xs[k]) / step;
    if (!(secant > 0.0)) {
      d[k] = d[k + 1] = 0.0;
      continue;
    }
    const double alpha = d[k] / secant;
    const double beta = d[k + 1] / secant;
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      d[k] = tau * alpha * secant;
      d[k + 1] = tau * beta * secant;
    }
  }
}

// Safeguarded Newton for an increasing g on [lo, hi] with g(lo) <= 0 <= g(hi).
template <class G, class D>
double bracketed_newton(const G& g, const D& dg, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    if (gx < 0.0) lo = x;
    else hi = x;
    const double slope = dg(x);
    double next = slope > 0.0 ? x - gx / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-15 * std::fabs(x) || hi - lo <= 1e-15 * hi) return next;
    x = next;
  }
  return x;
}

}  // namespace

double MomentumTable::Branch::eval(double v) const noexcept {
  const int last = static_cast<int>(x.size()) - 1;
  double pos = (v - origin) / step;
  if (pos <= 0.0) return x.front();
  if (pos >= last) return x.back();
  const int k = static_cast<int>(pos);
  const double t = pos - k;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * x[k] + h10 * step * slope[k] + h01 * x[k + 1] + h11 * step * slope[k + 1];
}

MomentumTable::MomentumTable(double rest_ratio) : a_(rest_ratio), grid_step_(kGridStep) {
  if (!(a_ >= 0.0) || !std::isfinite(a_)) throw InvalidArgument("MomentumTable: rest ratio must be >= 0");

  const auto cells = static_cast<std::size_t>(std::lround(kGridEnd / kGridStep));
  auto dens = [this](double x) { return density(x); };
  std::vector<double> cell(cells);
  for (std::size_t j = 0; j < cells; ++j) cell[j] = gk15(dens, j * kGridStep, (j + 1) * kGridStep);

  IntegralSpec beyond_spec;
  beyond_spec.integrand = [this](double y) { return density(kGridEnd + y); };
  beyond_spec.rel_tol = 1e-12;
  beyond_spec.abs_tol = 0.0;
  beyond_spec.label = "momentum table tail";
  const double beyond = integrate_semi_infinite(beyond_spec).value;

  cumulative_.assign(cells + 1, 0.0);
  for (std::size_t j = 0; j < cells; ++j) cumulative_[j + 1] = cumulative_[j] + cell[j];
  tail_.assign(cells + 1, 0.0);
  tail_[cells] = beyond;
  for (std::size_t j = cells; j-- > 0;) tail_[j] = tail_[j + 1] + cell[j];
  total_ = tail_[0];

  const int K = kKnotsPerBranch;

  const double t_half = std::cbrt(0.5);
  lower_.origin = 0.0;
  lower_.step = t_half / K;
  lower_.x.resize(K + 1);
  lower_.slope.resize(K + 1);
  lower_.x[0] = 0.0;
  lower_.slope[0] = std::cbrt(3.0 * total_ / fermi_factor(a_));
  for (int k = 1; k <= K; ++k) {
    const double t = k * lower_.step;
    const double target = t * t * t * total_;
    const double x = solve_lower(target);
    lower_.x[k] = x;
    lower_.slope[k] = 3.0 * t * t * total_ / density(x);
  }

  upper_.origin = std::numbers::ln2;
  upper_.step = (kUpperEnd - std::numbers::ln2) / K;
  upper_.x.resize(K + 1);
  upper_.slope.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    const double s = upper_.origin + k * upper_.step;
    const double target = std::exp(-s) * total_;
    const double x = solve_upper(target);
    upper_.x[k] = x;
    upper_.slope[k] = target / density(x);
  }

  limit_slopes(lower_.x, lower_.slope, lower_.step);
  limit_slopes(upper_.x, upper_.slope, upper_.step);
}

double MomentumTable::density(double x) const noexcept {
  return x * x * fermi_factor(std::sqrt(x * x + a_ * a_));
}

double MomentumTable::lower_cdf_raw(double x, std::size_t cell) const noexcept {
  const double x0 = cell * grid_step_;
  return cumulative_[cell] + gk15([this](double y) { return density(y); }, x0, x);
}

double MomentumTable::upper_tail_raw(double x, std::size_t cell) const noexcept {
  const double x1 = (cell + 1) * grid_step_;
  return tail_[cell + 1] + gk15([this](double y) { return density(y); }, x, x1);
}

double MomentumTable::solve_lower(double target) const {
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  std::size_t cell = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - cumulative_.begin() - 1, 0));
  cell = std::min(cell, cumulative_.size() - 2);
  const double lo = cell * grid_step_;
  return bracketed_newton([&](double x) { return lower_cdf_raw(x, cell) - target; },
                          [&](double x) { return density(x); }, lo, lo + grid_step_);
}

double MomentumTable::solve_upper(double target) const {
  // tail_ is decreasing: first index with tail_[j] < target, minus one.
  auto it = std::upper_bound(tail_.begin(), tail_.end(), target, std::greater<>());
  std::size_t cell = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - tail_.begin() - 1, 0));
  cell = std::min(cell, tail_.size() - 2);
  const double lo = cell * grid_step_;
  return bracketed_newton([&](double x) { return target - upper_tail_raw(x, cell); },
                          [&](double x) { return density(x); }, lo, lo + grid_step_);
}

double MomentumTable::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  const auto cells = cumulative_.size() - 1;
  if (x >= kGridEnd) return 1.0 - tail_[cells] / total_;
  const auto cell = std::min(static_cast<std::size_t>(x / grid_step_), cells - 1);
  if (cumulative_[cell] < 0.5 * total_) return lower_cdf_raw(x, cell) / total_;
  return 1.0 - upper_tail_raw(x, cell) / total_;
}

double MomentumTable::quantile(double u) const noexcept {
  if (u <= 0.5) return lower_.eval(std::cbrt(u));
  return upper_.eval(-std::log1p(-u));
}

std::vector<double> MomentumTable::knots() const {
  std::vector<double> out(lower_.x.begin(), lower_.x.end());
  out.insert(out.end(), upper_.x.begin() + 1, upper_.x.end());
  return out;
}

SamplerTables build_sampler(const ModelConfig& cfg) {
  cfg.validate();
  SamplerTables st;
  std::map<double, std::size_t> by_ratio;
  const double kT = cfg.kT();
  for (const auto& s : cfg.catalog) {
    const double a = cfg.rest_energy(s) / kT;
    st.rest_ratio.push_back(a);
    auto [it, inserted] = by_ratio.try_emplace(a, st.tables.size());
    if (inserted) st.tables.push_back(std::make_shared<const MomentumTable>(a));
    st.table_of.push_back(it->second);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < cfg.catalog.size(); ++i) {
    st.species_weight.push_back(st.table_for(i).total());
    sum += st.species_weight.back();
  }
  double running = 0.0;
  for (auto& w : st.species_weight) {
    w /= sum;
    running += w;
    st.species_cdf.push_back(running);
  }
  st.species_cdf.back() = 1.0;

  // Vose's construction of the alias table.
  const std::size_t n = st.species_weight.size();
  st.alias_threshold.assign(n, 1.0);
  st.alias_index.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    st.alias_index[i] = i;
    scaled[i] = st.species_weight[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    st.alias_threshold[s] = scaled[s];
    st.alias_index[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  return st;
}

}  // namespace vacuumleap
