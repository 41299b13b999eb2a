#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ngon/polynomial.hpp"

namespace ngon {

// T_n by T_{n+1} = 2x T_n - T_{n-1} from T_0 = 1, T_1 = x.
ExactPolynomial chebyshev_t(unsigned n);

// |T_n(cos y) - cos(n y)|; T_n is evaluated exactly at the double cos(y).
double chebyshev_trig_residual(unsigned n, double y);

// D_n(x) = 2 T_n(x/2), monic with integer coefficients. Requires n >= 1.
ExactPolynomial dickson(unsigned n);

// |D_n(t + 1/t) - (t^n + t^-n)|. Throws std::domain_error for t == 0.
double dickson_identity_residual(unsigned n, std::complex<double> t);
// Same residual divided by max(1, |t|^n, |t|^-n).
double dickson_identity_relative_residual(unsigned n, std::complex<double> t);

// Truncated series sum_j coefficients[j] x^(2j); holds exactly `order`
// coefficients.
struct EvenPowerSeries {
  std::vector<Rational> coefficients;
  std::size_t order() const noexcept { return coefficients.size(); }
};

// Quotient a / b truncated to `order` terms. Throws std::domain_error if b
// has a zero constant term.
EvenPowerSeries divide_series(const EvenPowerSeries& a, const EvenPowerSeries& b, std::size_t order);

// x * T_m(1/(2x)) / T_{m-1}(1/(2x)) as a series in x^2, i.e. the Laurent
// series of the ratio shifted up by one power. Coefficient 0 is the x^-1
// coefficient of the ratio (always 1), coefficient j the x^(2j-1) one.
EvenPowerSeries chebyshev_ratio_series(unsigned m, std::size_t order);

// Coefficients of x^1, x^3, ..., x^(2k-1) of T_m(1/(2x)) / T_{m-1}(1/(2x)).
// Requires m >= 2 and 1 <= k <= m - 1.
std::vector<Rational> catalan_ratio_coefficients(unsigned m, unsigned k);

// c_0 .. c_{k-1} by c_{j+1} = sum_i c_i c_{j-i}.
std::vector<Integer> catalan_numbers(unsigned k);

struct MinimaxReport {
  unsigned n = 0;
  std::size_t grid_points = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  double reference_norm = 0;      // grid sup-norm of 2^(1-n) T_n on [-1, 1]
  double min_perturbed_norm = 0;  // smallest sup-norm among the perturbed trials
  unsigned violations = 0;        // trials with norm < reference_norm - kMinimaxSlack
};

inline constexpr double kMinimaxSlack = 1e-9;

// Compares 2^(1-n) T_n against monic perturbations 2^(1-n) T_n + q, deg q < n,
// q's coefficients uniform in [-1, 1] from a seeded mt19937_64.
MinimaxReport minimax_deviation_report(unsigned n, std::size_t grid_points, unsigned trials, std::uint64_t seed);

}  // namespace ngon
