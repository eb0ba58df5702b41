#include <algorithm>
#include <cmath>
#include <set>

#include "lpi/analysis.hpp"
#include "lpi/errors.hpp"

namespace lpi {

FitResult fit_exponent(const std::vector<std::pair<std::int64_t, Real>>& values) {
  std::set<std::int64_t> distinct;
  for (const auto& [N, v] : values) {
    if (N < 1) throw HypothesisError("fit needs N >= 1");
    if (!(v > 0)) throw HypothesisError("fit needs positive values, got " + v.str() + " at N = " + std::to_string(N));
    distinct.insert(N);
  }
  if (distinct.size() < 3) throw HypothesisError("fit needs at least 3 distinct N");

  FitResult f;
  for (const auto& [N, v] : values)
    f.points.emplace_back(std::log(static_cast<double>(N)), static_cast<double>(log(v)));
  const double n = static_cast<double>(f.points.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : f.points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : f.points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (const auto& [x, y] : f.points) f.max_residual = std::max(f.max_residual, std::abs(y - (f.intercept + f.slope * x)));
  if (!std::isfinite(f.slope)) throw InternalError("non-finite slope");
  return f;
}

}  // namespace lpi
