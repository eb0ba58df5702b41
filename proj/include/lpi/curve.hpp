#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lpi/int_poly.hpp"
#include "lpi/lattice_point.hpp"

namespace lpi {

/// Polynomial curve n -> (P_1(n), ..., P_d(n)) in Z^d.
///
/// A checked curve has non-constant components with strictly increasing
/// degrees. Transform intermediates may temporarily break separation; they are
/// built with `Curve::unchecked` and report it through `is_separated()`. Every
/// counting and operator entry point calls `require_valid()`.
class Curve {
 public:
  /// Validating constructor; throws HypothesisError on constant components or
  /// non-separated degrees.
  explicit Curve(std::vector<IntPoly> components);
  static Curve unchecked(std::vector<IntPoly> components);

  /// Moment curve (n, n^2, ..., n^d).
  static Curve moment(int d);

  std::size_t dim() const noexcept { return components_.size(); }
  const std::vector<IntPoly>& components() const noexcept { return components_; }
  const IntPoly& component(std::size_t j) const { return components_.at(j); }

  /// Sum of the component degrees.
  int total_degree() const noexcept { return total_degree_; }
  bool is_separated() const noexcept;
  bool has_constant_component() const noexcept;
  void require_valid() const;

  /// Exact point gamma(n).
  LatticePoint at(std::int64_t n) const;
  std::vector<mpz_class> at_exact(const mpz_class& n) const;

  /// gamma(1), ..., gamma(N).
  std::vector<LatticePoint> samples(std::int64_t N) const;

  /// True when gamma is injective on [1, N] (checked by direct comparison).
  bool injective_on(std::int64_t N) const;

  /// Upper bound on #{m : gamma(m) = v} for any fixed v: the smallest
  /// component degree.
  int fibre_bound() const noexcept;

  /// "n,n^2,n^3"
  std::string to_string() const;

  friend bool operator==(const Curve& a, const Curve& b) { return a.components_ == b.components_; }

 private:
  struct UncheckedTag {};
  Curve(std::vector<IntPoly> components, UncheckedTag);

  std::vector<IntPoly> components_;
  int total_degree_ = 0;
};

/// Comma-separated polynomial expressions, e.g. "n,n^2,n^3".
Curve parse_curve(std::string_view text);
Curve parse_curve_unchecked(std::string_view text);

/// gamma(n) for the curve on machine integers: convenience alias.
inline LatticePoint eval_curve(const Curve& c, std::int64_t n) { return c.at(n); }
inline int total_degree(const Curve& c) { return c.total_degree(); }

/// Keeps the selected coordinates (0-based, distinct, taken in increasing
/// order). A selection from a separated curve is again separated.
Curve project(const Curve& c, const std::vector<std::size_t>& coords);

}  // namespace lpi
