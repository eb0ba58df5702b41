#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace lpi {

/// 50-decimal-digit binary float used for norms, ratios and the conjectured
/// constant. Exponents and counts stay exact; only these derived quantities
/// are rounded.
using Real = boost::multiprecision::cpp_bin_float_50;

/// num/den in lowest terms; gmpxx's two-argument constructor does not reduce.
inline mpq_class rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline Real to_real(const mpz_class& z) { return Real(z.get_str()); }
inline Real to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

/// base^exponent for a positive base and an exact rational exponent.
inline Real rational_pow(const Real& base, const mpq_class& exponent) {
  using boost::multiprecision::pow;
  return pow(base, to_real(exponent));
}

}  // namespace lpi
