#include "ngon/rational.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace ngon {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot represent a non-finite double exactly");
  return Rational(value);
}

double to_double(const Rational& value) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::string to_string(const Rational& value) { return value.get_str(); }

ComplexRational exact_complex(std::complex<double> value) {
  return {exact_rational(value.real()), exact_rational(value.imag())};
}

std::complex<double> to_complex(const ComplexRational& value) {
  return {to_double(value.re), to_double(value.im)};
}

}  // namespace ngon
