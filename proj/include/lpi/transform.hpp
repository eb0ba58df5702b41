#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lpi/curve.hpp"
#include "lpi/lattice_point.hpp"

namespace lpi {

/// x -> (a_1 x_1, ..., a_d x_d), all a_j nonzero.
struct Dilation {
  std::vector<mpz_class> factors;
};

/// x_target -> x_target - b * x_source (0-based indices, target != source).
struct Shear {
  std::size_t target = 0;
  std::size_t source = 0;
  mpz_class b;
};

/// x -> x + offset.
struct Translation {
  std::vector<mpz_class> offset;
};

using TransformStep = std::variant<Dilation, Shear, Translation>;

/// Ordered composition of integer dilations, shears and translations; steps
/// apply first to last.
class AffineTransform {
 public:
  AffineTransform() = default;
  explicit AffineTransform(std::vector<TransformStep> steps);

  const std::vector<TransformStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t shear_count() const noexcept;

  AffineTransform& then(TransformStep step);
  /// `*this` followed by `next`.
  AffineTransform then(const AffineTransform& next) const;

  /// Throws HypothesisError on zero dilation factors, equal shear indices or
  /// indices/sizes that do not match dimension `d`.
  void validate(std::size_t d) const;

  LatticePoint apply(const LatticePoint& x) const;
  /// Same as `apply` with translations dropped.
  LatticePoint apply_linear(const LatticePoint& x) const;

  std::string to_string() const;

 private:
  std::vector<TransformStep> steps_;
};

/// T gamma, component-wise. Dilation multiplies P_j by a_j, a shear replaces
/// P_target by P_target - b P_source, a translation adds constants. The result
/// may be non-separated (check `is_separated()`); a constant component throws
/// HypothesisError("constant component after ...").
Curve apply_transform(const Curve& c, const AffineTransform& t);

/// Outcome of `reduce_canonical`: `transform` maps `reduced` back onto the
/// input, i.e. apply_transform(reduced, transform) == input.
struct Reduction {
  Curve reduced;
  AffineTransform transform;
  std::string diagnostic;  // empty unless the reduction was abandoned
};

/// Peels translations, shears against earlier components and monomial
/// dilations off a curve whose first component is linear, targeting the forms
/// (n, P(n)) and (n, n^2, n^3, ...). Curves with a non-linear first component
/// are returned unchanged with an empty transform; so is any input for which
/// the elimination would produce a constant component (with a diagnostic).
Reduction reduce_canonical(const Curve& c);

}  // namespace lpi
