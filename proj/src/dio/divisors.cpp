#include "lpi/divisors.hpp"

#include <algorithm>
#include <limits>

namespace lpi {

std::vector<std::int64_t> divisors(std::int64_t z) {
  if (z == 0) throw HypothesisError("divisors: argument must be nonzero");
  if (z == std::numeric_limits<std::int64_t>::min()) throw OverflowError("divisors: |z| exceeds int64");
  const std::int64_t m = z < 0 ? -z : z;
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t divisor_count(std::int64_t z) {
  return static_cast<std::int64_t>(divisors(z).size());
}

std::vector<std::array<std::int64_t, 3>> ordered_factorizations(std::int64_t z, int parts) {
  std::vector<std::array<std::int64_t, 3>> out;
  if (parts == 2) {
    for_each_factorization2(z, [&](std::int64_t a, std::int64_t b) { out.push_back({a, b, 0}); });
  } else if (parts == 3) {
    for_each_factorization3(
        z, [&](std::int64_t a, std::int64_t b, std::int64_t c) { out.push_back({a, b, c}); });
  } else {
    throw HypothesisError("ordered_factorizations: parts must be 2 or 3");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpi
