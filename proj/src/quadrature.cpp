#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "error.hpp"

namespace vacuumleap {
namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss), depth};
}

}  // namespace

QuadratureResult integrate_semi_infinite(const IntegralSpec& spec) {
  if (!spec.integrand) throw InvalidArgument("integrate_semi_infinite: empty integrand");
  if (!(spec.rel_tol > 0.0)) throw InvalidArgument("integrate_semi_infinite: rel_tol must be positive");
  if (!(spec.abs_tol >= 0.0)) throw InvalidArgument("integrate_semi_infinite: abs_tol must be non-negative");
  if (!(spec.cutoff > 0.0)) throw InvalidArgument("integrate_semi_infinite: cutoff must be positive");

  // Unit panels up to x = 8 where the integrands peak, then geometric growth.
  std::vector<double> edges;
  for (double x = 0.0; x < std::min(8.0, spec.cutoff); x += 1.0) edges.push_back(x);
  for (double x = 8.0; x < spec.cutoff; x *= 2.0) edges.push_back(x);
  edges.push_back(spec.cutoff);

  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double total = 0.0;
  double total_error = 0.0;
  int evaluations = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gauss_kronrod(spec.integrand, edges[i], edges[i + 1], 0);
    evaluations += 15;
    total += p.value;
    total_error += p.error;
    queue.push(p);
  }

  auto converged = [&] { return total_error <= std::max(spec.rel_tol * std::fabs(total), spec.abs_tol); };

  while (!converged()) {
    if (!std::isfinite(total))
      throw QuadratureError(spec.label, total, total_error, "integrand produced a non-finite value");
    if (static_cast<int>(queue.size()) >= kMaxSubintervals)
      throw QuadratureError(spec.label, total, total_error, "subinterval limit reached");
    const Panel worst = queue.top();
    if (worst.depth >= kMaxBisectionDepth)
      throw QuadratureError(spec.label, total, total_error, "maximum bisection depth reached");
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(spec.integrand, worst.a, mid, worst.depth + 1);
    const Panel right = gauss_kronrod(spec.integrand, mid, worst.b, worst.depth + 1);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in panel order so the value does not depend on the running update.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  QuadratureResult result;
  for (const auto& p : panels) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  result.evaluations = evaluations;
  if (!std::isfinite(result.value))
    throw QuadratureError(spec.label, result.value, result.error_estimate, "integrand produced a non-finite value");
  return result;
}

QuadratureResult momentum_integral(const std::function<double(double)>& f, const ModelConfig& cfg,
                                   const std::string& label, double cutoff) {
  const double scale = cfg.momentum_scale();
  IntegralSpec spec;
  spec.integrand = [&](double x) { return f(x * scale); };
  spec.rel_tol = cfg.quadrature_rel_tol;
  spec.cutoff = cutoff;
  spec.label = label;
  QuadratureResult r = integrate_semi_infinite(spec);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

}  // namespace vacuumleap
