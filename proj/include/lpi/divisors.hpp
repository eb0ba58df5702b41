#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lpi/errors.hpp"

namespace lpi {

/// Positive divisors of |z| in ascending order, by trial division up to
/// sqrt(|z|). Throws HypothesisError for z == 0.
std::vector<std::int64_t> divisors(std::int64_t z);

/// Number of positive divisors of |z|.
std::int64_t divisor_count(std::int64_t z);

/// Calls `visit(d1, d2)` for every ordered pair of signed integers with
/// d1 * d2 == z. Throws HypothesisError for z == 0.
template <class Visit>
void for_each_factorization2(std::int64_t z, Visit&& visit) {
  if (z == 0) throw HypothesisError("factorization of zero");
  for (std::int64_t d : divisors(z)) {
    const std::int64_t e = z / d;
    visit(d, e);
    visit(-d, -e);
  }
}

/// Calls `visit(d1, d2, d3)` for every ordered signed triple with
/// d1 * d2 * d3 == z. Throws HypothesisError for z == 0.
template <class Visit>
void for_each_factorization3(std::int64_t z, Visit&& visit) {
  if (z == 0) throw HypothesisError("factorization of zero");
  const std::int64_t sign = z < 0 ? -1 : 1;
  const std::int64_t mag = z < 0 ? -z : z;
  for (std::int64_t a : divisors(mag)) {
    const std::int64_t rest = mag / a;
    for (std::int64_t b : divisors(rest)) {
      const std::int64_t c = sign * (rest / b);
      // every sign pattern whose product has the sign of z
      visit(a, b, c);
      visit(-a, -b, c);
      visit(-a, b, -c);
      visit(a, -b, -c);
    }
  }
}

/// Materialized form of the visitors above, sorted lexicographically.
/// `parts` must be 2 or 3; a pair uses the first two entries of each array.
std::vector<std::array<std::int64_t, 3>> ordered_factorizations(std::int64_t z, int parts);

}  // namespace lpi
