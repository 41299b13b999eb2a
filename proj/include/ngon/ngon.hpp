#pragma once

#include <complex>
#include <vector>

#include "ngon/polynomial.hpp"

namespace ngon {

/// Regular n-gon with circumradius R centred at (x0, y0). Vertex k sits at
/// angle theta + 2*pi*k/n, counterclockwise. The vertex set repeats with
/// period 2*pi/n, so theta is stored reduced into [0, 2*pi/n).
class RegularNgon {
 public:
  explicit RegularNgon(int n, double radius = 1.0, double theta = 0.0, double center_x = 0.0,
                       double center_y = 0.0);

  int n() const noexcept { return n_; }
  double radius() const noexcept { return radius_; }
  double theta() const noexcept { return theta_; }
  double center_x() const noexcept { return center_x_; }
  double center_y() const noexcept { return center_y_; }
  double period() const noexcept;

 private:
  int n_;
  double radius_;
  double theta_;
  double center_x_;
  double center_y_;
};

double canonical_angle(double theta, int n);

/// Unit-modulus vertices a_k = exp(i(theta + 2*pi*k/n)) and beta = exp(2*pi*i/n).
struct VertexConfiguration {
  std::vector<std::complex<double>> vertices;
  std::complex<double> beta;
};

VertexConfiguration vertex_configuration(int n, double theta);

// x0 + R cos(theta + 2*pi*k/n), k = 0..n-1, in vertex order.
std::vector<double> projections(const RegularNgon& g);

// Monic polynomial whose roots are the projections.
RealPolynomial ngon_polynomial(const RegularNgon& g);

// R^n 2^(1-n) [T_n((x - x0)/R) - cos(n theta)], expanded.
RealPolynomial chebyshev_form(const RegularNgon& g);

inline constexpr int kMonomialSumMaxN = 12;

/// Sum over all ordered splits of a k-subset of vertices into j numerator
/// and k-j denominator factors of (prod numerator)/(prod denominator). This
/// is the coefficient of t^(2j-k) in the symmetric expansion of f_t; it
/// vanishes whenever 2j != k. Requires 3 <= n <= 12, 1 <= k <= n-1, 0 <= j <= k.
std::complex<double> rotation_monomial_sum(int n, int k, int j, double theta);

// sum_{i != j} a_i^2 a_j over the unit vertices. Requires 4 <= n <= 64.
std::complex<double> squares_cross_sum(int n, double theta);

}  // namespace ngon
