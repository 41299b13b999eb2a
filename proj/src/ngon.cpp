#include "ngon/ngon.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ngon/chebyshev.hpp"

namespace ngon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier compensated accumulator for complex sums.
class ComplexSum {
 public:
  void add(std::complex<double> v) {
    add_one(re_, re_c_, v.real());
    add_one(im_, im_c_, v.imag());
  }
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_one(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
    else comp += (v - t) + sum;
    sum = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

}  // namespace

double canonical_angle(double theta, int n) {
  const double period = kTwoPi / n;
  double r = std::fmod(theta, period);
  if (r < 0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

RegularNgon::RegularNgon(int n, double radius, double theta, double center_x, double center_y)
    : n_(n), radius_(radius), theta_(0.0), center_x_(center_x), center_y_(center_y) {
  if (n < 3) throw std::invalid_argument("RegularNgon: n must be at least 3, got " + std::to_string(n));
  if (!(radius > 0) || !std::isfinite(radius)) throw std::invalid_argument("RegularNgon: radius must be positive");
  if (!std::isfinite(theta) || !std::isfinite(center_x) || !std::isfinite(center_y))
    throw std::invalid_argument("RegularNgon: parameters must be finite");
  theta_ = canonical_angle(theta, n);
}

double RegularNgon::period() const noexcept { return kTwoPi / n_; }

VertexConfiguration vertex_configuration(int n, double theta) {
  if (n < 1) throw std::invalid_argument("vertex_configuration: n must be positive");
  VertexConfiguration vc;
  vc.vertices.reserve(n);
  for (int k = 0; k < n; ++k) vc.vertices.push_back(std::polar(1.0, theta + kTwoPi * k / n));
  vc.beta = std::polar(1.0, kTwoPi / n);
  return vc;
}

std::vector<double> projections(const RegularNgon& g) {
  std::vector<double> out;
  out.reserve(g.n());
  for (int k = 0; k < g.n(); ++k)
    out.push_back(g.center_x() + g.radius() * std::cos(g.theta() + kTwoPi * k / g.n()));
  return out;
}

RealPolynomial ngon_polynomial(const RegularNgon& g) { return from_roots(projections(g)); }

RealPolynomial chebyshev_form(const RegularNgon& g) {
  const int n = g.n();
  const RealPolynomial t = to_real(chebyshev_t(static_cast<unsigned>(n)));
  const double scale = std::ldexp(1.0, 1 - n);

  // a_i = 2^(1-n) R^(n-i) [T_n]_i, so that sum a_i (x - x0)^i is the target.
  std::vector<double> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = scale * t.coefficient(i) * std::pow(g.radius(), n - i);
  a[0] -= scale * std::pow(g.radius(), n) * std::cos(n * g.theta());

  // Horner in (x - x0).
  std::vector<double> c{a[n]};
  for (int i = n - 1; i >= 0; --i) {
    c.push_back(0.0);
    for (std::size_t d = c.size() - 1; d > 0; --d) c[d] = c[d - 1] - g.center_x() * c[d];
    c[0] = -g.center_x() * c[0] + a[i];
  }
  c[n] = 1.0;
  return RealPolynomial(std::move(c));
}

std::complex<double> rotation_monomial_sum(int n, int k, int j, double theta) {
  if (n < 3 || n > kMonomialSumMaxN)
    throw std::invalid_argument("rotation_monomial_sum: n must be in [3, " + std::to_string(kMonomialSumMaxN) + "]");
  if (k < 1 || k > n - 1) throw std::invalid_argument("rotation_monomial_sum: k must be in [1, n-1]");
  if (j < 0 || j > k) throw std::invalid_argument("rotation_monomial_sum: j must be in [0, k]");

  const VertexConfiguration vc = vertex_configuration(n, theta);
  ComplexSum sum;
  const unsigned full = 1u << n;
  for (unsigned subset = 0; subset < full; ++subset) {
    if (std::popcount(subset) != k) continue;
    // Enumerate the numerator part as a sub-mask of the subset.
    for (unsigned num = subset;; num = (num - 1) & subset) {
      if (std::popcount(num) == j) {
        std::complex<double> term{1.0, 0.0};
        for (int i = 0; i < n; ++i) {
          if (!(subset >> i & 1u)) continue;
          term *= (num >> i & 1u) ? vc.vertices[i] : std::conj(vc.vertices[i]);
        }
        sum.add(term);
      }
      if (num == 0) break;
    }
  }
  return sum.value();
}

std::complex<double> squares_cross_sum(int n, double theta) {
  if (n < 4 || n > 64) throw std::invalid_argument("squares_cross_sum: n must be in [4, 64]");
  const VertexConfiguration vc = vertex_configuration(n, theta);
  ComplexSum sum;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> sq = vc.vertices[i] * vc.vertices[i];
    for (int j = 0; j < n; ++j)
      if (i != j) sum.add(sq * vc.vertices[j]);
  }
  return sum.value();
}

}  // namespace ngon
