#include "ngon/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ngon {

double evaluate_exact(const ExactPolynomial& p, double x) {
  return to_double(evaluate(p, exact_rational(x)));
}

std::complex<double> evaluate_exact(const ExactPolynomial& p, std::complex<double> x) {
  const ComplexRational z = exact_complex(x);
  ComplexRational acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    Rational re = acc.re * z.re - acc.im * z.im + p[i];
    Rational im = acc.re * z.im + acc.im * z.re;
    acc.re = std::move(re);
    acc.im = std::move(im);
  }
  return to_complex(acc);
}

RealPolynomial to_real(const ExactPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.push_back(to_double(v));
  return RealPolynomial(std::move(c));
}

namespace {

struct Cluster {
  double lo;
  double hi;
  double sum;
  std::size_t count;
};

// f'/f for monic f with the given roots. Strictly decreasing between
// consecutive distinct roots, from +inf to -inf.
double log_derivative(std::span<const double> roots, double x) {
  double acc = 0.0;
  for (double r : roots) acc += 1.0 / (x - r);
  return acc;
}

double bisect_between(std::span<const double> roots, double lo, double hi) {
  const double width = hi - lo;
  auto inner = [&](double from, double dir, auto positive) {
    double step = width / 4;
    for (int k = 0; k < 64; ++k, step /= 4) {
      const double x = from + dir * step;
      if (x <= lo || x >= hi) break;
      const double v = log_derivative(roots, x);
      if (std::isfinite(v) && positive(v)) return x;
    }
    throw BracketError("no sign change of f' near " + std::to_string(from), RootBracket{lo, hi});
  };
  double a = inner(lo, +1.0, [](double v) { return v > 0; });
  double b = inner(hi, -1.0, [](double v) { return v < 0; });
  if (!(a < b)) throw BracketError("degenerate bracket for f' root", RootBracket{lo, hi});

  for (int it = 0; it < kBisectionMaxIter && b - a > kBisectionTol; ++it) {
    const double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;
    const double v = log_derivative(roots, mid);
    if (v == 0.0) return mid;
    if (v > 0) a = mid;
    else b = mid;
  }
  return a + (b - a) / 2;
}

}  // namespace

std::vector<double> critical_points(std::span<const double> f_roots) {
  if (f_roots.size() < 2) throw std::invalid_argument("critical_points needs at least two roots");
  for (double r : f_roots)
    if (!std::isfinite(r)) throw std::invalid_argument("critical_points: non-finite root");

  std::vector<double> roots(f_roots.begin(), f_roots.end());
  std::sort(roots.begin(), roots.end());

  std::vector<Cluster> clusters;
  for (double r : roots) {
    if (!clusters.empty() && r - clusters.back().hi <= kCoincidentRootTol) {
      auto& c = clusters.back();
      c.hi = r;
      c.sum += r;
      ++c.count;
    } else {
      clusters.push_back({r, r, r, 1});
    }
  }

  std::vector<double> out;
  out.reserve(roots.size() - 1);
  for (const auto& c : clusters) {
    const double mean = c.sum / static_cast<double>(c.count);
    for (std::size_t m = 1; m < c.count; ++m) out.push_back(mean);
  }
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i)
    out.push_back(bisect_between(roots, clusters[i].hi, clusters[i + 1].lo));

  std::sort(out.begin(), out.end());
  return out;
}

double sup_norm_grid(const RealPolynomial& p, double a, double b, std::size_t grid_points) {
  if (!(a < b)) throw std::invalid_argument("sup_norm_grid: need a < b");
  if (grid_points < 2) throw std::invalid_argument("sup_norm_grid: need at least two grid points");
  double best = 0.0;
  const double last = static_cast<double>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = (i + 1 == grid_points) ? b : a + (b - a) * (static_cast<double>(i) / last);
    best = std::max(best, std::abs(evaluate(p, x)));
  }
  return best;
}

}  // namespace ngon
