#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lpi/curve.hpp"
#include "lpi/real.hpp"
#include "lpi/sparse.hpp"
#include "lpi/transform.hpp"

namespace lpi {

/// A_N f(x) = (1/N) sum_{n=1}^N f(x - gamma(n)).
SparseFunction average(const Curve& c, std::int64_t N, const SparseFunction& f);
/// N * A_N f, i.e. the sum without the 1/N.
SparseFunction average_unnormalized(const Curve& c, std::int64_t N, const SparseFunction& f);
/// Adjoint of the unnormalized average: sum_{n=1}^N f(y + gamma(n)).
SparseFunction adjoint_unnormalized(const Curve& c, std::int64_t N, const SparseFunction& f);

/// The values {Q(n) : n in Z} that fall in [1, N], sorted and distinct.
class RestrictedSequence {
 public:
  /// Q must be non-constant with positive leading coefficient.
  explicit RestrictedSequence(IntPoly q);

  const IntPoly& generator() const noexcept { return q_; }
  std::vector<std::int64_t> values(std::int64_t N) const;

 private:
  IntPoly q_;
};

/// (1/|X_N|) sum_{m in X_N} f(x - gamma(m)); throws HypothesisError if X_N is
/// empty.
SparseFunction restricted_average(const Curve& c, const RestrictedSequence& seq, std::int64_t N,
                                  const SparseFunction& f);

/// sum_x f(x) g(x), exact.
mpq_class pairing(const SparseFunction& f, const SparseFunction& g);

/// An exponent q in [1, inf].
struct LqExponent {
  bool infinite = false;
  mpq_class q = 1;

  static LqExponent inf() { return {true, 0}; }
  static LqExponent of(const mpq_class& q);
  /// "3", "5/2", "inf"
  static LqExponent parse(std::string_view text);
  bool is_integer() const { return !infinite && q.get_den() == 1; }
};

/// (sum |f|^q)^{1/q}, or max |f| for q = inf. Throws HypothesisError for q < 1.
Real lq_norm(const SparseFunction& f, const LqExponent& q);
/// sum |f|^q exactly, for integer q >= 1.
mpq_class lq_norm_pow(const SparseFunction& f, unsigned q);

/// <A 1_E, 1_F> for the unnormalized average, i.e.
/// #{(n, x) : n in [1,N], x in F, x - gamma(n) in E}. Box/box pairs use a
/// closed form; otherwise the smaller sparse side is scanned.
mpz_class incidence(const Curve& c, std::int64_t N, const LatticeSet& E, const LatticeSet& F);

struct AlphaBeta {
  mpz_class mass;  // <A 1_E, 1_F>
  mpq_class alpha;  // mass / |F|
  mpq_class beta;   // mass / |E|
};
/// Throws HypothesisError for empty E or F.
AlphaBeta alpha_beta(const LatticeSet& E, const LatticeSet& F, const Curve& c, std::int64_t N);

/// g = f o T for a unimodular step sequence (shears, translations, dilations
/// by +-1); support is mapped through T^{-1}.
SparseFunction pullback(const SparseFunction& f, const AffineTransform& t);

/// g_r(s, y) = f(a s + r, y) for r = 0..a-1, splitting coordinate `coord`.
std::vector<SparseFunction> dilation_slices(const SparseFunction& f, std::size_t coord, std::int64_t a);

}  // namespace lpi
