#pragma once

// Overflow-checked 64-bit arithmetic. Every hot counting loop runs on int64
// with these helpers; any overflow raises OverflowError instead of wrapping.

#include <cstdint>
#include <gmpxx.h>

#include "lpi/errors.hpp"

namespace lpi::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::int64_t narrow(const mpz_class& v) {
  if (!v.fits_slong_p()) throw OverflowError("value " + v.get_str() + " exceeds int64");
  return v.get_si();
}

inline mpz_class widen(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

/// Exact n^e for small e, checked.
inline std::int64_t ipow(std::int64_t base, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

/// Floor of the square root of a non-negative integer, exact.
inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw InternalError("isqrt of negative value");
  mpz_class z(static_cast<long>(v));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

}  // namespace lpi::checked
