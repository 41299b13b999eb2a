#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngon/chebyshev.hpp"
#include "ngon/verify.hpp"

namespace ngon {

struct SuiteConfig {
  int n_min = 3;
  int n_max = 8;
  int samples_per_n = 10;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string output_path = "report.json";
};

inline constexpr int kSuiteDefaultMaxN = 16;
inline constexpr int kSuiteHardMaxN = 32;

// Fixed tolerances of the algebraic checks; geometric checks use
// SuiteConfig::tolerance.
inline constexpr double kSymmetricSumTol = 1e-10;
inline constexpr double kTrigIdentityTol = 1e-10;
inline constexpr double kDicksonRelTol = 1e-9;

// Throws std::invalid_argument unless 3 <= n_min <= n_max <= kSuiteHardMaxN,
// samples_per_n >= 1 and tolerance > 0.
void validate(const SuiteConfig& config);

/// Runs every check for each n in [n_min, n_max] and each seeded parameter
/// draw. Results are sorted by (check, n, theta); ties keep draw order.
std::vector<CheckResult> run_suite(const SuiteConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

// JSON array of {check, n, theta, R, x0, residual, tolerance, pass, extra}.
std::string serialize_report(const std::vector<CheckResult>& results);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_text_file(const std::string& path, const std::string& contents);

std::string serialize_fit(const FitResult& fit);

struct CatalanRow {
  std::size_t index;  // coefficient of x^(2*index - 1)
  Rational value;
  Integer target;     // c_(index-1)
  Rational error;     // |value - target|
};

std::vector<CatalanRow> catalan_table(unsigned m, unsigned terms);

// "[c0, c1, ...]" with exact rationals.
std::string format_coefficients(const ExactPolynomial& p);

struct FigureSpec {
  int n = 5;
  double theta = 0.0;
  bool show_polynomial_curve = true;
  bool show_circles = true;
  bool show_lines = true;
  int width_px = 600;
  int height_px = 600;
};

/// SVG 1.1 drawing of the unit polygon at rotation theta with the tangent
/// circles, the vertical lines through the critical points and the graph of
/// f. Element ids: polygon, circumcircle, circle-d<k>, line-l<k>, curve-f.
std::string render_figure(const FigureSpec& spec);

}  // namespace ngon
