#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpi {

/// Univariate polynomial in Z[n] with arbitrary-precision coefficients.
///
/// Coefficients are stored in ascending powers. The representation is
/// canonical: trailing zero coefficients are stripped, so the zero polynomial
/// has no coefficients at all and `degree()` returns -1 for it.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, int power);
  static IntPoly constant(const mpz_class& c) { return monomial(c, 0); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of n^i; zero beyond the degree.
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;

  mpz_class eval(const mpz_class& n) const;
  /// Exact evaluation at a machine integer; throws OverflowError if the value
  /// does not fit in int64.
  std::int64_t eval_i64(std::int64_t n) const;

  /// P(n + h), computed exactly.
  IntPoly shifted(const mpz_class& h) const;
  /// gcd of the coefficients (non-negative; 0 for the zero polynomial).
  mpz_class content() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& p);
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Text form in the variable "n", highest power first ("2n^3-n+5").
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Parses a sum of signed monomials in "n" with integer coefficients, e.g.
/// "2n^3 - n + 5", "3*n^2", "-n". Throws ParseError with a character position.
IntPoly parse_poly(std::string_view text);

/// Integer roots of `p` inside [lo, hi].
///
/// Candidates are taken from the divisors of the lowest nonzero coefficient
/// (after removing the content), so the search never scans the interval. When
/// `p` is identically zero every integer of the interval is a root; that case
/// is reported through `all_roots` and `roots` stays empty.
struct IntegerRoots {
  bool all_roots = false;
  std::vector<std::int64_t> roots;  // ascending, distinct

  std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;
};
IntegerRoots integer_roots(const IntPoly& p, std::int64_t lo, std::int64_t hi);

}  // namespace lpi
