#include "ngon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ngon {

TangentCircleFamily tangent_circle_radii(const RegularNgon& g) {
  TangentCircleFamily fam;
  const int n = g.n();
  for (int d = 1; d <= (n - 1) / 2; ++d) fam.radii.push_back(g.radius() * std::cos(std::numbers::pi * d / n));
  fam.has_center_line = n % 2 == 0;
  return fam;
}

CheckResult make_result(std::string check, const RegularNgon& g, double residual, double tolerance) {
  CheckResult r;
  r.check = std::move(check);
  r.n = g.n();
  r.theta = g.theta();
  r.radius = g.radius();
  r.center_x = g.center_x();
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  return r;
}

CheckResult check_extreme_tangency(const RegularNgon& g, double tol) {
  const auto crit = critical_points(projections(g));
  const double apothem = g.radius() * std::cos(std::numbers::pi / g.n());
  const double residual = std::max(std::abs(crit.front() - (g.center_x() - apothem)),
                                   std::abs(crit.back() - (g.center_x() + apothem)));
  auto r = make_result("extreme_tangency", g, residual, tol);
  r.extra["apothem"] = apothem;
  return r;
}

CheckResult check_circle_pairing(const RegularNgon& g, double tol) {
  const auto crit = critical_points(projections(g));
  std::vector<double> observed;
  observed.reserve(crit.size());
  for (double c : crit) observed.push_back(std::abs(c - g.center_x()));
  std::sort(observed.begin(), observed.end());

  const auto fam = tangent_circle_radii(g);
  std::vector<double> expected;
  for (double rad : fam.radii) expected.insert(expected.end(), 2, rad);
  if (fam.has_center_line) expected.push_back(0.0);
  std::sort(expected.begin(), expected.end());

  if (observed.size() != expected.size()) {
    auto r = make_result("circle_pairing", g, std::numeric_limits<double>::infinity(), tol);
    r.pass = false;
    r.failure = FailureKind::cardinality_mismatch;
    r.extra["observed_count"] = static_cast<double>(observed.size());
    r.extra["expected_count"] = static_cast<double>(expected.size());
    return r;
  }
  double residual = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) residual = std::max(residual, std::abs(observed[i] - expected[i]));
  auto r = make_result("circle_pairing", g, residual, tol);
  r.extra["circles"] = static_cast<double>(fam.radii.size());
  return r;
}

CheckResult check_rotation_invariance(int n, double theta1, double theta2, double radius, double center_x,
                                      double tol) {
  const RegularNgon g1(n, radius, theta1, center_x);
  const RegularNgon g2(n, radius, theta2, center_x);
  const auto f1 = ngon_polynomial(g1);
  const auto f2 = ngon_polynomial(g2);
  double residual = 0.0;
  for (int d = 1; d <= n; ++d) residual = std::max(residual, std::abs(f1.coefficient(d) - f2.coefficient(d)));
  auto r = make_result("rotation_invariance", g1, residual, tol);
  r.extra["theta2"] = g2.theta();
  r.extra["constant_term_difference"] = f2.coefficient(0) - f1.coefficient(0);
  return r;
}

CheckResult check_vanishing_coefficients(int n, double theta, double tol) {
  const RegularNgon g(n, 1.0, theta);
  const auto f = ngon_polynomial(g);
  double residual = 0.0;
  for (int d = n - 1; d >= 0; d -= 2) {
    if (d == 0 && n % 2 == 1) continue;
    residual = std::max(residual, std::abs(f.coefficient(d)));
  }
  return make_result("vanishing_coefficients", g, residual, tol);
}

CheckResult check_center_root(const RegularNgon& g, double tol) {
  const auto line = derivative(ngon_polynomial(g), static_cast<unsigned>(g.n() - 1));
  if (line.degree() != 1) throw std::domain_error("check_center_root: f^(n-1) is not linear");
  const double root = -line[0] / line[1];
  auto r = make_result("center_root", g, std::abs(root - g.center_x()), tol);
  r.extra["root"] = root;
  return r;
}

namespace {

struct LinearFit {
  double center_x;
  double radius;
  double sse;
};

class FitObjective {
 public:
  FitObjective(std::span<const double> lines, int n) : n_(n) {
    order_.resize(lines.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return lines[a] < lines[b]; });
    for (auto i : order_) sorted_.push_back(lines[i]);
    mean_ = std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / n;
  }

  // Sorted cos(theta + 2 pi k / n) together with their vertex index k.
  std::vector<std::pair<double, std::size_t>> sorted_cosines(double theta) const {
    std::vector<std::pair<double, std::size_t>> c(n_);
    for (int k = 0; k < n_; ++k) c[k] = {std::cos(theta + 2.0 * std::numbers::pi * k / n_), static_cast<std::size_t>(k)};
    std::sort(c.begin(), c.end());
    return c;
  }

  LinearFit solve(double theta) const {
    const auto c = sorted_cosines(theta);
    double cmean = 0.0;
    for (const auto& [v, k] : c) cmean += v;
    cmean /= n_;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double dc = c[i].first - cmean;
      sxy += dc * (sorted_[i] - mean_);
      sxx += dc * dc;
    }
    const double radius = sxy / sxx;
    const double center = mean_ - radius * cmean;
    double sse = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double e = sorted_[i] - center - radius * c[i].first;
      sse += e * e;
    }
    return {center, radius, sse};
  }

  const std::vector<std::size_t>& order() const { return order_; }

 private:
  int n_;
  std::vector<std::size_t> order_;
  std::vector<double> sorted_;
  double mean_ = 0.0;
};

}  // namespace

FitResult fit_regular_ngon(std::span<const double> lines, double tol) {
  const int n = static_cast<int>(lines.size());
  if (n < 3) throw std::invalid_argument("fit_regular_ngon: need at least 3 lines");
  if (!(tol > 0)) throw std::invalid_argument("fit_regular_ngon: tolerance must be positive");
  for (double v : lines)
    if (!std::isfinite(v)) throw std::invalid_argument("fit_regular_ngon: lines must be finite");
  const auto [lo, hi] = std::minmax_element(lines.begin(), lines.end());
  const double spread = *hi - *lo;
  if (!(spread > 0)) throw std::invalid_argument("fit_regular_ngon: all lines coincide");

  const FitObjective objective(lines, n);
  const double period = 2.0 * std::numbers::pi / n;
  const double step = period / kFitThetaGrid;

  int best_i = 0;
  double best_sse = objective.solve(0.0).sse;
  for (int i = 1; i < kFitThetaGrid; ++i) {
    const double sse = objective.solve(i * step).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best_i = i;
    }
  }

  // Golden-section refinement around the best grid node; the objective is
  // periodic so the bracket may leave [0, period).
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = (best_i - 1) * step;
  double b = (best_i + 1) * step;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = objective.solve(x1).sse;
  double f2 = objective.solve(x2).sse;
  while (b - a > kFitThetaWidth) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = objective.solve(x1).sse;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = objective.solve(x2).sse;
    }
  }
  double theta = best_i * step;
  const double refined = a + (b - a) / 2;
  if (objective.solve(refined).sse <= best_sse) theta = refined;
  theta = canonical_angle(theta, n);

  const LinearFit fit = objective.solve(theta);
  FitResult out;
  out.center_x = fit.center_x;
  out.radius = fit.radius;
  out.theta = theta;
  out.residual = std::sqrt(fit.sse / n);
  out.spread = spread;
  out.feasible = fit.radius > 0 && out.residual <= tol * spread;

  const auto c = objective.sorted_cosines(theta);
  out.assignment.assign(n, 0);
  for (int i = 0; i < n; ++i) out.assignment[c[i].second] = objective.order()[i];
  return out;
}

std::vector<double> second_derivative_radii(int n, double theta) {
  if (n < 4) throw std::invalid_argument("second_derivative_radii: n must be at least 4");
  const RegularNgon g(n, 1.0, theta);
  const auto first = critical_points(projections(g));
  auto second = critical_points(first);
  for (auto& v : second) v = std::abs(v);
  std::sort(second.begin(), second.end());
  return second;
}

}  // namespace ngon
