#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lpi/curve.hpp"
#include "lpi/real.hpp"

namespace lpi {

/// A point (1/p, 1/q) of the Riesz diagram, stored exactly.
class ExponentPair {
 public:
  ExponentPair(mpq_class inv_p, mpq_class inv_q);
  /// From p and q themselves; "inf" is accepted by `parse_exponent`.
  static ExponentPair from_pq(const mpq_class& p, const mpq_class& q);

  const mpq_class& inv_p() const noexcept { return inv_p_; }
  const mpq_class& inv_q() const noexcept { return inv_q_; }
  /// 1/r = 1/p - 1/q, recomputed on every call.
  mpq_class inv_r() const { return inv_p_ - inv_q_; }
  mpq_class inv_p_dual() const { return 1 - inv_p_; }
  mpq_class inv_q_dual() const { return 1 - inv_q_; }
  /// The dual pair (1/q', 1/p').
  ExponentPair dual() const { return ExponentPair(inv_q_dual(), inv_p_dual()); }

  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.inv_p_ == b.inv_p_ && a.inv_q_ == b.inv_q_;
  }

 private:
  mpq_class inv_p_;
  mpq_class inv_q_;
};

/// Parses "3/2", "2", "inf" as an exponent p >= 1 and returns 1/p.
mpq_class parse_inverse_exponent(std::string_view text);
/// Parses a rational "a/b" or integer.
mpq_class parse_rational(std::string_view text);

enum class Region { outside, supercritical, critical_boundary, subcritical };
std::string to_string(Region r);

/// p_c = 2 - 1/D.
mpq_class critical_exponent(const Curve& c);
mpq_class critical_exponent_for_degree(int D);

/// Exact region of (1/p, 1/q) for total degree D:
///   q < p                                  -> outside
///   D/q > (D-1)/p and D/p' > (D-1)/q'      -> supercritical
///   equality in either of the two          -> critical_boundary
///   otherwise                              -> subcritical
Region classify_exponents(int D, const ExponentPair& e);
inline Region classify_exponents(const Curve& c, const ExponentPair& e) {
  return classify_exponents(c.total_degree(), e);
}

/// N^{-D(1/p-1/q)} + N^{-1/q'} + N^{-1/p}.
Real conjectured_constant(int D, const ExponentPair& e, std::int64_t N);
inline Real conjectured_constant(const Curve& c, const ExponentPair& e, std::int64_t N) {
  return conjectured_constant(c.total_degree(), e, N);
}

/// Which of the three conjectured terms dominates (largest exponent of N);
/// ties resolve in the order box, dirac (N^{-1/q'}), dual (N^{-1/p}).
enum class DominantTerm { box, dirac, dual };
std::string to_string(DominantTerm t);
DominantTerm dominant_term(int D, const ExponentPair& e);

}  // namespace lpi
