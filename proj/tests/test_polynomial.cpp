#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ngon/chebyshev.hpp"
#include "ngon/polynomial.hpp"

using namespace ngon;

namespace {

void require_coeffs(const RealPolynomial& p, std::vector<double> expected, double tol = 1e-14) {
  REQUIRE(p.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p[i] == doctest::Approx(expected[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("from_roots expands products") {
  // (x - 1)(x + 1/2)^2 = x^3 - 3/4 x - 1/4
  require_coeffs(from_roots(std::vector<double>{1, -0.5, -0.5}), {-0.25, -0.75, 0, 1});
  require_coeffs(from_roots(std::vector<double>{}), {1});
  require_coeffs(from_roots(std::vector<double>{0, 0}), {0, 0, 1});
}

TEST_CASE("zero polynomial is empty") {
  RealPolynomial z{0.0, 0.0};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(evaluate(RealPolynomial{}, 7.0) == 0.0);
  CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("derivative") {
  require_coeffs(derivative(RealPolynomial{-0.25, -0.75, 0, 1}), {-0.75, 0, 3});
  CHECK(derivative(RealPolynomial{5.0}).is_zero());
  require_coeffs(derivative(RealPolynomial{0, 0, 0, 1}, 2), {0, 6});
  CHECK_THROWS_AS(derivative(RealPolynomial{1, 2}, 0), std::invalid_argument);

  // falling factorial on the exact domain: d^3/dx^3 x^5 = 60 x^2
  const auto d3 = derivative(ExactPolynomial::monomial(5), 3);
  CHECK(d3 == ExactPolynomial::monomial(2, Rational(60)));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(RealPolynomial{-0.25, -0.75, 0, 1}, 1.0) == 0.0);
  // T_5(cos y) = cos 5y
  const auto t5 = to_real(chebyshev_t(5));
  CHECK(evaluate(t5, std::cos(0.3)) == doctest::Approx(std::cos(1.5)).epsilon(1e-13));
  CHECK(std::cos(1.5) == doctest::Approx(0.0707372).epsilon(1e-6));

  const std::complex<double> i{0, 1};
  const auto v = evaluate(RealPolynomial{1, 0, 1}, i);  // 1 + i^2
  CHECK(std::abs(v) < 1e-15);
}

TEST_CASE("evaluate is exact on rationals") {
  const Rational q = make_rational(-7, 3);
  for (unsigned n : {3u, 8u, 17u}) {
    const auto t = chebyshev_t(n);
    Rational direct = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      Rational power = 1;
      for (std::size_t k = 0; k < i; ++k) power *= q;
      direct += t[i] * power;
    }
    CHECK(evaluate(t, q) == direct);
  }
}

TEST_CASE("rational conversions round to nearest") {
  CHECK(to_double(make_rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(make_rational(2, 3)) == 2.0 / 3.0);
  CHECK(to_double(exact_rational(0.1)) == 0.1);
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("critical_points examples") {
  // f' = 3x^2 - 3/4
  auto c = critical_points(std::vector<double>{1, -0.5, -0.5});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(c[1] == doctest::Approx(0.5).epsilon(1e-13));

  // f = (x^2 - 1/2)^2, f' = 4x^3 - 2x
  const double s = std::sqrt(2.0) / 2;
  c = critical_points(std::vector<double>{s, -s, -s, s});
  REQUIRE(c.size() == 3);
  CHECK(c[0] == doctest::Approx(-s).epsilon(1e-13));
  CHECK(std::abs(c[1]) < 1e-13);
  CHECK(c[2] == doctest::Approx(s).epsilon(1e-13));

  c = critical_points(std::vector<double>{-1, 1});
  REQUIRE(c.size() == 1);
  CHECK(std::abs(c[0]) < 1e-13);
}

TEST_CASE("critical_points rejects bad input") {
  CHECK_THROWS_AS(critical_points(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(critical_points(std::vector<double>{0.0, NAN}), std::invalid_argument);
}

TEST_CASE("critical_points agrees with expanded derivative roots") {
  // Oracle: plain bisection on the Horner value of the expanded f', fine for
  // well separated roots.
  const std::vector<double> roots{-3.0, -1.25, 0.5, 0.75, 4.0};
  const auto fp = derivative(from_roots(roots));
  std::vector<double> oracle;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    double a = roots[i], b = roots[i + 1];
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      if ((evaluate(fp, a) < 0) == (evaluate(fp, m) < 0)) a = m;
      else b = m;
    }
    oracle.push_back(0.5 * (a + b));
  }
  const auto c = critical_points(roots);
  REQUIRE(c.size() == oracle.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - oracle[i]) < 1e-12);
}

TEST_CASE("sup_norm_grid") {
  const RealPolynomial t4 = to_real(make_rational(1, 8) * chebyshev_t(4));
  CHECK(std::abs(sup_norm_grid(t4, -1, 1, 10001) - 0.125) < 1e-6);
  CHECK(sup_norm_grid(RealPolynomial{0, 1}, -1, 1, 3) == 1.0);
  CHECK(sup_norm_grid(RealPolynomial{-2.5}, 3, 4, 5) == 2.5);
  CHECK_THROWS_AS(sup_norm_grid(t4, 1, -1, 10), std::invalid_argument);
  CHECK_THROWS_AS(sup_norm_grid(t4, -1, 1, 1), std::invalid_argument);
}

TEST_CASE("property: from_roots vanishes at its roots") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 32);
  for (double width : {1.0, 10.0}) {
    std::uniform_real_distribution<double> u(-width, width);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> r(len(rng));
      for (auto& v : r) v = u(rng);
      const auto p = from_roots(r);
      CHECK(p.degree() == static_cast<long>(r.size()));
      CHECK(p.leading() == 1.0);
      double maxc = 0;
      for (double c : p.coefficients()) maxc = std::max(maxc, std::abs(c));
      for (double x : r) {
        // Horner's error scale: sum |c_i| |x|^i, which is (n+1) max|c_i| at most on [-1, 1].
        double cond = 0;
        for (std::size_t i = p.size(); i-- > 0;) cond = cond * std::abs(x) + std::abs(p[i]);
        const double scale = width == 1.0 ? 1 + maxc : cond;
        CHECK(std::abs(evaluate(p, x)) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("property: critical points interlace and ignore input order") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_int_distribution<int> len(2, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> r(len(rng));
    for (auto& v : r) v = u(rng);
    if (trial % 3 == 0) r.push_back(r[0]);  // a double root
    const auto c = critical_points(r);
    REQUIRE(c.size() == r.size() - 1);

    std::vector<double> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i] >= sorted[i] - 1e-12);
      CHECK(c[i] <= sorted[i + 1] + 1e-12);
    }

    std::shuffle(r.begin(), r.end(), rng);
    const auto c2 = critical_points(r);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - c2[i]) <= 1e-12);
  }
}
