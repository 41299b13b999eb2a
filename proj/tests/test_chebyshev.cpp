#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ngon/chebyshev.hpp"

using namespace ngon;

namespace {

ExactPolynomial ints(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Independent route: T_n(x) = sum_k C(n, 2k) x^(n-2k) (x^2 - 1)^k, the real
// part of (x + i sqrt(1 - x^2))^n.
ExactPolynomial de_moivre(unsigned n) {
  ExactPolynomial acc;
  const ExactPolynomial x2m1{Rational(-1), Rational(0), Rational(1)};
  for (unsigned k = 0; 2 * k <= n; ++k) {
    ExactPolynomial term = ExactPolynomial::monomial(n - 2 * k, Rational(binomial(n, 2 * k)));
    for (unsigned i = 0; i < k; ++i) term = term * x2m1;
    acc = acc + term;
  }
  return acc;
}

// Independent route for the ratio: with s_m = x T_m(1/2x)/T_{m-1}(1/2x),
// s_1 = 1/2 and s_m = 1 - x^2 / s_{m-1}. Series are in powers of x^2.
std::vector<Rational> reciprocal(const std::vector<Rational>& s) {
  std::vector<Rational> r(s.size());
  r[0] = 1 / s[0];
  for (std::size_t j = 1; j < s.size(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= j; ++i) acc += s[i] * r[j - i];
    r[j] = -acc / s[0];
  }
  return r;
}

std::vector<Rational> continued_fraction_ratio(unsigned m, std::size_t order) {
  std::vector<Rational> s(order, Rational(0));
  s[0] = make_rational(1, 2);
  for (unsigned step = 2; step <= m; ++step) {
    const auto inv = reciprocal(s);
    std::vector<Rational> next(order, Rational(0));
    next[0] = 1;
    for (std::size_t j = 1; j < order; ++j) next[j] = -inv[j - 1];
    s = std::move(next);
  }
  return s;
}

}  // namespace

TEST_CASE("chebyshev_t small degrees") {
  CHECK(chebyshev_t(0) == ints({1}));
  CHECK(chebyshev_t(1) == ints({0, 1}));
  CHECK(chebyshev_t(2) == ints({-1, 0, 2}));
  CHECK(chebyshev_t(3) == ints({0, -3, 0, 4}));
}

TEST_CASE("chebyshev_t matches the de Moivre expansion") {
  for (unsigned n = 0; n <= 32; ++n) CHECK(chebyshev_t(n) == de_moivre(n));
}

TEST_CASE("property: leading coefficient, parity and recurrence") {
  const ExactPolynomial two_x{Rational(0), Rational(2)};
  for (unsigned n = 1; n <= 32; ++n) {
    const auto t = chebyshev_t(n);
    CHECK(t.degree() == static_cast<long>(n));
    Integer lead = 1;
    lead <<= (n - 1);
    CHECK(t.leading() == Rational(lead));
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(is_integer(t[i]));
      if ((i + n) % 2 == 1) CHECK(t[i] == 0);
    }
    if (n <= 31) CHECK(chebyshev_t(n + 1) == two_x * t - chebyshev_t(n - 1));
  }
}

TEST_CASE("chebyshev_trig_residual") {
  CHECK(chebyshev_trig_residual(5, 0.3) <= 1e-12);
  CHECK(chebyshev_trig_residual(0, 1.234) <= 1e-15);
  CHECK(chebyshev_trig_residual(7, std::numbers::pi) <= 1e-12);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (unsigned n = 0; n <= 32; ++n)
    for (int i = 0; i < 100; ++i) CHECK(chebyshev_trig_residual(n, u(rng)) <= 1e-10);
}

TEST_CASE("dickson polynomials") {
  CHECK(dickson(1) == ints({0, 1}));
  CHECK(dickson(2) == ints({-2, 0, 1}));
  CHECK(dickson(3) == ints({0, -3, 0, 1}));
  CHECK_THROWS_AS(dickson(0), std::invalid_argument);
  for (unsigned n = 1; n <= 32; ++n) {
    const auto d = dickson(n);
    CHECK(d.leading() == 1);
    for (const auto& c : d.coefficients()) CHECK(is_integer(c));
  }
}

TEST_CASE("dickson identity") {
  // D_2(10/3) = 100/9 - 2 = 82/9 = 3^2 + 3^-2
  CHECK(dickson_identity_residual(2, {3.0, 0.0}) <= 1e-12);
  CHECK(dickson_identity_residual(1, {0.7, -1.3}) <= 1e-15);
  CHECK(dickson_identity_residual(3, {0.0, 1.0}) <= 1e-12);
  CHECK_THROWS_AS(dickson_identity_residual(3, {0.0, 0.0}), std::domain_error);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> mod(0.5, 2.0), arg(0, 2 * std::numbers::pi);
  for (int i = 0; i < 100; ++i) {
    const auto t = std::polar(mod(rng), arg(rng));
    for (unsigned n = 1; n <= 32; ++n) CHECK(dickson_identity_relative_residual(n, t) <= 1e-9);
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan_numbers(1) == std::vector<Integer>{1});
  CHECK(catalan_numbers(5) == std::vector<Integer>{1, 1, 2, 5, 14});
  CHECK(catalan_numbers(6) == std::vector<Integer>{1, 1, 2, 5, 14, 42});
  // closed form C(2k, k) / (k + 1)
  const auto c = catalan_numbers(40);
  for (unsigned k = 0; k < 40; ++k) CHECK(c[k] == binomial(2 * k, k) / (k + 1));
  CHECK_THROWS_AS(catalan_numbers(0), std::invalid_argument);
}

TEST_CASE("ratio series: hand expansions") {
  // T_2(1/2x) / T_1(1/2x) = 1/x - 2x
  CHECK(catalan_ratio_coefficients(2, 1) == std::vector<Rational>{-2});
  // T_3 / T_2 = (1/x)(1 - 3x^2)/(1 - 2x^2) = 1/x - x - 2x^3 - ...
  CHECK(catalan_ratio_coefficients(3, 2) == std::vector<Rational>{-1, -2});
  for (unsigned m = 2; m <= 12; ++m) CHECK(chebyshev_ratio_series(m, 1).coefficients[0] == 1);

  CHECK_THROWS_AS(catalan_ratio_coefficients(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(catalan_ratio_coefficients(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(catalan_ratio_coefficients(3, 0), std::invalid_argument);
}

TEST_CASE("ratio series agrees with the continued fraction") {
  for (unsigned m : {2u, 3u, 4u, 7u, 10u, 25u, 40u}) {
    const std::size_t order = m;  // coefficients of x^-1 .. x^(2m-3)
    CHECK(chebyshev_ratio_series(m, order).coefficients == continued_fraction_ratio(m, order));
  }
}

TEST_CASE("ratio coefficients settle on negated Catalan numbers") {
  // The expansion converges to 1/x - c_0 x - c_1 x^3 - ..., and the first
  // five coefficients are already exact at m = 10.
  const std::vector<Rational> expected{-1, -1, -2, -5, -14};
  CHECK(catalan_ratio_coefficients(10, 5) == expected);
  CHECK(catalan_ratio_coefficients(40, 5) == expected);
  CHECK(catalan_ratio_coefficients(4, 3) == std::vector<Rational>{-1, -1, -3});

  const auto c = catalan_numbers(30);
  const auto q = catalan_ratio_coefficients(40, 30);
  for (std::size_t j = 0; j < 30; ++j) CHECK(q[j] == -Rational(c[j]));
}

TEST_CASE("series division") {
  EvenPowerSeries one{{Rational(1)}};
  EvenPowerSeries geo{{Rational(1), Rational(-1)}};  // 1 - z
  const auto q = divide_series(one, geo, 5);         // 1/(1 - z)
  CHECK(q.coefficients == std::vector<Rational>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(divide_series(one, EvenPowerSeries{{Rational(0), Rational(1)}}, 3), std::domain_error);
}

TEST_CASE("minimax deviation") {
  const auto r4 = minimax_deviation_report(4, 10001, 50, 1);
  CHECK(std::abs(r4.reference_norm - 0.125) < 1e-6);
  const auto r1 = minimax_deviation_report(1, 1001, 10, 0);
  CHECK(r1.reference_norm == 1.0);
  const auto r6 = minimax_deviation_report(6, 10001, 1000, 42);
  CHECK(r6.violations == 0);
  CHECK(r6.min_perturbed_norm >= r6.reference_norm);
  CHECK(r6.seed == 42);

  CHECK_THROWS_AS(minimax_deviation_report(0, 10001, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(minimax_deviation_report(3, 1000, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(minimax_deviation_report(3, 1001, 0, 0), std::invalid_argument);
}

TEST_CASE("minimax report is reproducible") {
  const auto a = minimax_deviation_report(5, 2001, 20, 9);
  const auto b = minimax_deviation_report(5, 2001, 20, 9);
  CHECK(a.min_perturbed_norm == b.min_perturbed_norm);
}
