#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ngon/rational.hpp"

namespace ngon {

/// Dense univariate polynomial with coefficients in ascending degree order:
/// coefficient i multiplies x^i. Trailing zero coefficients are stripped on
/// construction, so the zero polynomial is the empty sequence and
/// degree() == size() - 1 otherwise.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial monomial(std::size_t degree, T value = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(value);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c(p.coeffs_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RealPolynomial = Polynomial<double>;
using ExactPolynomial = Polynomial<Rational>;

/// Monic polynomial prod (x - r) over the given roots, repeats counted with
/// multiplicity. An empty root list gives the constant 1.
template <typename T>
Polynomial<T> from_roots(std::span<const T> roots) {
  std::vector<T> c{T(1)};
  c.reserve(roots.size() + 1);
  for (const T& r : roots) {
    c.push_back(T(0));
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Polynomial<T>(std::move(c));
}

inline RealPolynomial from_roots(std::span<const double> roots) { return from_roots<double>(roots); }

template <typename T>
Polynomial<T> derivative(const Polynomial<T>& p, unsigned order = 1) {
  if (order == 0) throw std::invalid_argument("derivative order must be positive");
  if (p.size() <= order) return {};
  std::vector<T> c(p.size() - order);
  for (std::size_t i = 0; i < c.size(); ++i) {
    T factor(1);
    for (std::size_t f = i + 1; f <= i + order; ++f) factor *= T(static_cast<long>(f));
    c[i] = p[i + order] * factor;
  }
  return Polynomial<T>(std::move(c));
}

// Horner evaluation; X may be a wider domain than T (double -> complex).
template <typename T, typename X>
X evaluate(const Polynomial<T>& p, const X& x) {
  X acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + X(p[i]);
  return acc;
}

inline Rational evaluate(const ExactPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Exact evaluation at the exact value of a double argument, rounded once.
double evaluate_exact(const ExactPolynomial& p, double x);
std::complex<double> evaluate_exact(const ExactPolynomial& p, std::complex<double> x);

// Coefficient-wise nearest binary64.
RealPolynomial to_real(const ExactPolynomial& p);

struct RootBracket {
  double lo;
  double hi;
};

class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, RootBracket bracket) : std::runtime_error(what), bracket_(bracket) {}
  RootBracket bracket() const noexcept { return bracket_; }

 private:
  RootBracket bracket_;
};

inline constexpr double kCoincidentRootTol = 1e-12;
inline constexpr double kBisectionTol = 1e-13;
inline constexpr int kBisectionMaxIter = 200;

/// Roots of f' for the monic f with the given real roots, sorted ascending.
///
/// Roots of f closer than kCoincidentRootTol are treated as one multiple root
/// and contribute multiplicity - 1 roots of f' at their mean. Between each
/// pair of consecutive distinct roots the single root of f' is found by
/// bisection. Throws BracketError when no sign change can be established.
std::vector<double> critical_points(std::span<const double> f_roots);

/// max |p(x)| over grid_points equally spaced nodes on [a, b], endpoints included.
double sup_norm_grid(const RealPolynomial& p, double a, double b, std::size_t grid_points);

}  // namespace ngon
