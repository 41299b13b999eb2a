#include "ngon/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ngon {

namespace {

Rational pow2(long e) {
  Rational q = 1;
  if (e >= 0) mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  else mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  return q;
}

std::complex<double> ipow(std::complex<double> base, unsigned e) {
  std::complex<double> acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

ExactPolynomial chebyshev_t(unsigned n) {
  ExactPolynomial prev{Rational(1)};
  if (n == 0) return prev;
  ExactPolynomial cur{Rational(0), Rational(1)};
  const ExactPolynomial two_x{Rational(0), Rational(2)};
  for (unsigned k = 1; k < n; ++k) {
    ExactPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double chebyshev_trig_residual(unsigned n, double y) {
  if (!std::isfinite(y)) throw std::invalid_argument("chebyshev_trig_residual: y must be finite");
  const double lhs = evaluate_exact(chebyshev_t(n), std::cos(y));
  return std::abs(lhs - std::cos(static_cast<double>(n) * y));
}

ExactPolynomial dickson(unsigned n) {
  if (n == 0) throw std::invalid_argument("dickson: n must be at least 1");
  const ExactPolynomial t = chebyshev_t(n);
  std::vector<Rational> c(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) c[i] = t[i] * pow2(1 - static_cast<long>(i));
  return ExactPolynomial(std::move(c));
}

double dickson_identity_residual(unsigned n, std::complex<double> t) {
  if (t == std::complex<double>{0.0, 0.0}) throw std::domain_error("dickson identity undefined at t = 0");
  const std::complex<double> z = t + 1.0 / t;
  const std::complex<double> lhs = evaluate_exact(dickson(n), z);
  const std::complex<double> rhs = ipow(t, n) + ipow(1.0 / t, n);
  return std::abs(lhs - rhs);
}

double dickson_identity_relative_residual(unsigned n, std::complex<double> t) {
  const double residual = dickson_identity_residual(n, t);
  const double m = std::abs(t);
  const double scale = std::max({1.0, std::pow(m, n), std::pow(m, -static_cast<double>(n))});
  return residual / scale;
}

EvenPowerSeries divide_series(const EvenPowerSeries& a, const EvenPowerSeries& b, std::size_t order) {
  if (b.coefficients.empty() || b.coefficients[0] == 0)
    throw std::domain_error("series division by a series with zero constant term");
  auto at = [](const EvenPowerSeries& s, std::size_t i) { return i < s.order() ? s.coefficients[i] : Rational(0); };
  EvenPowerSeries q;
  q.coefficients.reserve(order);
  for (std::size_t j = 0; j < order; ++j) {
    Rational acc = at(a, j);
    for (std::size_t i = 1; i <= j && i < b.order(); ++i) acc -= b.coefficients[i] * q.coefficients[j - i];
    q.coefficients.push_back(acc / b.coefficients[0]);
  }
  return q;
}

namespace {

// T_m(1/(2x)) = x^-m * A(x^2); A_j is the T_m coefficient of degree m - 2j
// scaled by 2^-(m-2j).
EvenPowerSeries reversed_even_part(unsigned m) {
  const ExactPolynomial t = chebyshev_t(m);
  EvenPowerSeries s;
  for (long d = m; d >= 0; d -= 2) s.coefficients.push_back(t.coefficient(static_cast<std::size_t>(d)) * pow2(-d));
  return s;
}

}  // namespace

EvenPowerSeries chebyshev_ratio_series(unsigned m, std::size_t order) {
  if (m < 2) throw std::invalid_argument("chebyshev_ratio_series: m must be at least 2");
  return divide_series(reversed_even_part(m), reversed_even_part(m - 1), order);
}

std::vector<Rational> catalan_ratio_coefficients(unsigned m, unsigned k) {
  if (m < 2) throw std::invalid_argument("catalan_ratio_coefficients: m must be at least 2");
  if (k < 1 || k > m - 1) throw std::invalid_argument("catalan_ratio_coefficients: need 1 <= k <= m - 1");
  const EvenPowerSeries s = chebyshev_ratio_series(m, k + 1);
  return {s.coefficients.begin() + 1, s.coefficients.end()};
}

std::vector<Integer> catalan_numbers(unsigned k) {
  if (k < 1) throw std::invalid_argument("catalan_numbers: k must be positive");
  std::vector<Integer> c{Integer(1)};
  while (c.size() < k) {
    Integer next = 0;
    const std::size_t j = c.size() - 1;
    for (std::size_t i = 0; i <= j; ++i) next += c[i] * c[j - i];
    c.push_back(next);
  }
  return c;
}

MinimaxReport minimax_deviation_report(unsigned n, std::size_t grid_points, unsigned trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("minimax_deviation_report: n must be positive");
  if (grid_points < 1001) throw std::invalid_argument("minimax_deviation_report: grid_points must be >= 1001");
  if (trials < 1) throw std::invalid_argument("minimax_deviation_report: trials must be positive");

  const ExactPolynomial monic_exact = pow2(1 - static_cast<long>(n)) * chebyshev_t(n);
  const RealPolynomial monic = to_real(monic_exact);

  MinimaxReport report;
  report.n = n;
  report.grid_points = grid_points;
  report.trials = trials;
  report.seed = seed;
  report.reference_norm = sup_norm_grid(monic, -1.0, 1.0, grid_points);
  report.min_perturbed_norm = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::vector<double> c = monic.coefficients();
    c.resize(n + 1, 0.0);
    std::vector<double> q(n);
    do {
      for (auto& v : q) v = unit(rng);
    } while (std::all_of(q.begin(), q.end(), [](double v) { return v == 0.0; }));
    for (unsigned i = 0; i < n; ++i) c[i] += q[i];
    const double norm = sup_norm_grid(RealPolynomial(std::move(c)), -1.0, 1.0, grid_points);
    report.min_perturbed_norm = std::min(report.min_perturbed_norm, norm);
    if (norm < report.reference_norm - kMinimaxSlack) ++report.violations;
  }
  return report;
}

}  // namespace ngon
