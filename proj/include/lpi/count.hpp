#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpi/curve.hpp"
#include "lpi/int_poly.hpp"
#include "lpi/lattice_point.hpp"
#include "lpi/multi_poly.hpp"

namespace lpi {

enum class CountMethod { brute, mitm, lemma1, lemma2, lemma3 };
enum class CountMode { homogeneous, inhomogeneous };
std::string to_string(CountMethod m);
std::string to_string(CountMode m);
CountMethod parse_count_method(const std::string& s);

/// Serial reference or OpenMP kernel; both give identical results.
enum class Exec { serial, parallel };

struct CountOptions {
  /// Upper bound on enumerated tuples (N^{2s} for brute, N^s for mitm).
  std::uint64_t budget_tuples = 4'000'000'000ULL;
  Exec exec = Exec::parallel;
  int threads = 0;  // 0: OpenMP default
  /// c in the hypothesis guards |z_j| <= c N^{deg}; only used for flagging.
  long range_slack = 4;
};

/// One exact count with enough context to reproduce it.
struct CountRecord {
  std::string curve;
  CountMode mode = CountMode::homogeneous;
  int s_or_k = 1;
  std::int64_t N = 0;
  std::vector<std::int64_t> z;  // empty for homogeneous counts
  mpz_class count;
  CountMethod method = CountMethod::brute;
  double elapsed = 0;
  bool cached = false;
  bool outside_hypothesis = false;

  /// Single-line JSON with the count as a decimal string.
  std::string to_json_line() const;
  static CountRecord from_json_line(const std::string& line);
  /// (curve, mode, s_or_k, N, z, method) as text; identifies a cache entry.
  std::string cache_key() const;
};

/// J_{s,gamma}(N) = #{(n, m) in [1,N]^{2s} : sum gamma(n_i) = sum gamma(m_i)}.
CountRecord count_homogeneous(const Curve& c, int s, std::int64_t N, CountMethod method,
                              const CountOptions& opt = {});

/// #{(n, m) in [1,N]^{2k} : sum gamma(n_i) - sum gamma(m_i) = z}.
CountRecord count_inhomogeneous(const Curve& c, int k, std::int64_t N, const LatticePoint& z, CountMethod method,
                                const CountOptions& opt = {});

/// Distinct k-fold sums gamma(n_1)+...+gamma(n_k) with their multiplicities,
/// sorted by point.
struct SumMultiset {
  std::vector<LatticePoint> points;
  std::vector<std::int64_t> weights;
};
SumMultiset k_fold_sums(const Curve& c, int k, std::int64_t N, const CountOptions& opt = {});

struct MaxInhomogeneous {
  LatticePoint z;           // lexicographically smallest maximizer
  std::int64_t count = 0;   // max over z != 0
  std::uint64_t distinct_sums = 0;
  std::uint64_t pair_items = 0;
};
/// max_{z != 0} count_inhomogeneous(c, k, N, z). Pairs of k-fold sums are
/// processed layer by layer in the first coordinate; z and -z have equal
/// counts, so only non-negative first differences are visited.
MaxInhomogeneous max_inhomogeneous(const Curve& c, int k, std::int64_t N, const CountOptions& opt = {});

/// Factorization counter for P(n) - P(m) = z on [1,N]^2.
class Lemma1Counter {
 public:
  Lemma1Counter(IntPoly P, std::int64_t N);
  std::int64_t count(std::int64_t z) const;
  const IntPoly& poly() const noexcept { return P_; }
  std::int64_t N() const noexcept { return N_; }

 private:
  IntPoly P_;
  std::int64_t N_;
  DifferenceQuotient dq_;
  // G_h(n) = Q2(n, n - h) for h in [-(N-1), N-1], h != 0, index h + N - 1
  std::vector<std::vector<std::int64_t>> shifted_;
};

/// Counter for n1 - m1 + n2 - m2 = z1, P(n1) - P(m1) + P(n2) - P(m2) = z2.
class Lemma2Counter {
 public:
  Lemma2Counter(IntPoly P, std::int64_t N);
  std::int64_t count(std::int64_t z1, std::int64_t z2) const;
  const IntPoly& poly() const noexcept { return P_; }
  std::int64_t N() const noexcept { return N_; }

 private:
  std::int64_t p(std::int64_t n) const { return table_[static_cast<std::size_t>(n - table_lo_)]; }
  IntPoly P_;
  std::int64_t N_;
  DifferenceQuotient dq_;
  CompiledPoly q3_;
  std::int64_t table_lo_;
  std::vector<std::int64_t> table_;
};

/// Statistics of one Lemma3Counter run.
struct Lemma3Stats {
  std::int64_t cells = 0;
  std::int64_t zero_cells = 0;  // cells with M = 0
  std::int64_t factorizations = 0;
};

/// One solution's cell: u = n1 - m1 + n2, t = m2 + m3, M = M(u, t) and the
/// divisor tuple that produced it (empty when M = 0).
struct FactorCell {
  std::int64_t u = 0, t = 0;
  mpz_class M;
  std::vector<std::int64_t> factorization;

  /// M recomputed from (u, t, z) equals the stored value.
  bool consistent(std::int64_t z1, std::int64_t z2, std::int64_t z3) const;
};

/// Counter for the (n, n^2, n^3) system with three variables on each side.
class Lemma3Counter {
 public:
  explicit Lemma3Counter(std::int64_t N);
  std::int64_t count(std::int64_t z1, std::int64_t z2, std::int64_t z3, Lemma3Stats* stats = nullptr,
                     std::vector<FactorCell>* cells = nullptr) const;
  std::int64_t N() const noexcept { return N_; }

  /// M(u, t) for the given target; exposed for tests and generators.
  static mpz_class cell_value(std::int64_t u, std::int64_t t, std::int64_t z1, std::int64_t z2, std::int64_t z3);

 private:
  std::int64_t N_;
};

CountRecord count_lemma1(const IntPoly& P, std::int64_t z, std::int64_t N, const CountOptions& opt = {});
CountRecord count_lemma2(const IntPoly& P, std::int64_t z1, std::int64_t z2, std::int64_t N,
                         const CountOptions& opt = {});
CountRecord count_lemma3(std::int64_t z1, std::int64_t z2, std::int64_t z3, std::int64_t N,
                         const CountOptions& opt = {});

}  // namespace lpi
