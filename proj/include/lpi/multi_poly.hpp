#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpi/int_poly.hpp"

namespace lpi {

/// Sparse polynomial in up to three variables X, Y, Z with mpz coefficients.
/// Only used for the difference quotients, so the variable count is fixed.
class MultiPoly {
 public:
  static constexpr int kVars = 3;
  using Exponent = std::array<int, kVars>;

  MultiPoly() = default;

  static MultiPoly constant(const mpz_class& c);
  /// The single variable `v` (0, 1 or 2).
  static MultiPoly variable(int v);
  /// P(L) for a univariate P and a multivariate argument L.
  static MultiPoly compose(const IntPoly& p, const MultiPoly& arg);

  const std::map<Exponent, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree_in(int v) const;
  int total_degree() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const mpz_class& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  mpz_class eval(const std::array<mpz_class, kVars>& at) const;

  /// Substitutes univariate polynomials for X, Y, Z.
  IntPoly substitute(const std::array<IntPoly, kVars>& args) const;

  /// Exact quotient by (X_a - X_b); throws InternalError on a nonzero
  /// remainder.
  MultiPoly divide_by_difference(int a, int b) const;

  /// "X^2+2*X*Y-3"
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const mpz_class& c);
  std::map<Exponent, mpz_class> terms_;
};

/// Term list of a MultiPoly narrowed to int64 for hot-loop evaluation.
/// Evaluation is overflow-checked.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  std::int64_t eval(std::int64_t x, std::int64_t y, std::int64_t z = 0) const;

 private:
  struct Term {
    std::int64_t coeff;
    MultiPoly::Exponent exp;
  };
  std::vector<Term> terms_;
};

/// Q2 and Q3 with
///   P(X) - P(Y)                  = Q2(X,Y) (X-Y)
///   P(X) - P(Y) + P(Z) - P(X-Y+Z) = Q3(X,Y,Z) (X-Y)(Y-Z)
/// both certified on an integer grid at construction.
struct DifferenceQuotient {
  IntPoly source;
  MultiPoly q2;
  MultiPoly q3;
  std::int64_t certified_points = 0;
};

/// Requires deg P >= 2. Throws InternalError if a division leaves a remainder
/// or the certification grid disagrees.
DifferenceQuotient difference_quotient(const IntPoly& p);

/// Q2(n, n - h) as a polynomial in n.
IntPoly q2_along_shift(const DifferenceQuotient& dq, const mpz_class& h);

}  // namespace lpi
