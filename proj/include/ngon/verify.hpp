#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngon/ngon.hpp"

namespace ngon {

/// Circles centred at O tangent to the chords joining vertices d steps
/// apart, d = 1..floor((n-1)/2). radii[0] is the inscribed circle.
struct TangentCircleFamily {
  std::vector<double> radii;  // R cos(pi d / n), strictly decreasing
  bool has_center_line = false;  // n even: one critical line passes through O
};

TangentCircleFamily tangent_circle_radii(const RegularNgon& g);

enum class FailureKind { none, cardinality_mismatch };

struct CheckResult {
  std::string check;
  int n = 0;
  double theta = 0;
  double radius = 1;
  double center_x = 0;
  double residual = 0;  // +inf when failure == cardinality_mismatch
  double tolerance = 0;
  bool pass = false;
  FailureKind failure = FailureKind::none;
  std::map<std::string, double> extra;
};

// pass <=> residual <= tolerance (NaN fails).
CheckResult make_result(std::string check, const RegularNgon& g, double residual, double tolerance);

// Extreme critical points against x0 -/+ R cos(pi/n).
CheckResult check_extreme_tangency(const RegularNgon& g, double tol);

// Multiset {|c - x0|} of critical points against each tangent radius twice,
// plus a 0 for even n.
CheckResult check_circle_pairing(const RegularNgon& g, double tol);

// Max difference of the coefficients of degrees 1..n between rotations
// theta1 and theta2. The constant-term difference goes into extra.
CheckResult check_rotation_invariance(int n, double theta1, double theta2, double radius, double center_x,
                                      double tol);

// Unit centred polygon: coefficients of degrees n-1, n-3, ... vanish, except
// the constant term when n is odd.
CheckResult check_vanishing_coefficients(int n, double theta, double tol);

// Root of f^(n-1) against x0.
CheckResult check_center_root(const RegularNgon& g, double tol);

struct FitResult {
  bool feasible = false;
  double center_x = 0;
  double radius = 0;
  double theta = 0;
  double residual = 0;  // root-mean-square over the lines
  double spread = 0;
  // assignment[k] = index of the input line matched to vertex k.
  std::vector<std::size_t> assignment;
};

inline constexpr int kFitThetaGrid = 1024;
inline constexpr double kFitThetaWidth = 1e-12;

/// Searches for a regular n-gon (n = lines.size()) whose vertex projections
/// match the given vertical lines. Sorted lines are matched to sorted
/// projections; for fixed theta the best (x0, R) is a linear least-squares
/// fit. Theta is scanned on a grid and refined by golden-section search.
/// Feasible iff RMS residual <= tol * spread and R > 0.
FitResult fit_regular_ngon(std::span<const double> lines, double tol);

// Sorted |roots of f''| for the unit centred polygon, n >= 4.
std::vector<double> second_derivative_radii(int n, double theta);

}  // namespace ngon
