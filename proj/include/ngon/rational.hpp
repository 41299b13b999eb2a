#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace ngon {

// Exact rational in lowest terms with a positive denominator. GMP keeps
// results of arithmetic canonical; values built from a numerator/denominator
// pair must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

// Exact value of a binary64 number (every finite double is a dyadic rational).
Rational exact_rational(double value);

// Nearest binary64 value, ties to even.
double to_double(const Rational& value);

bool is_integer(const Rational& value);

std::string to_string(const Rational& value);

// Gaussian rational, used to evaluate exact polynomials at complex points.
struct ComplexRational {
  Rational re;
  Rational im;
};

ComplexRational exact_complex(std::complex<double> value);
std::complex<double> to_complex(const ComplexRational& value);

}  // namespace ngon
