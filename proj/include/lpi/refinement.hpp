#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpi/curve.hpp"
#include "lpi/sparse.hpp"

namespace lpi {

/// E_0 = E, F_0 = F and for j = 1..k
///   alpha_j = <A 1_{E_{j-1}}, 1_{F_{j-1}}> / |F_{j-1}|
///   F_j     = {x in F_{j-1} : A 1_{E_{j-1}}(x) > alpha_j / 2}
///   beta_j  = <A* 1_{F_j}, 1_{E_{j-1}}> / |E_{j-1}|
///   E_j     = {y in E_{j-1} : A* 1_{F_j}(y) > beta_j / 2}
/// with the unnormalized operators. Each step keeps at least half of the
/// current mass.
struct Refinement {
  Curve curve;
  std::int64_t N = 0;
  int k = 0;
  std::vector<LatticePoint> gammas;     // gamma(1..N)
  std::vector<SparseSet> E, F;          // index 0..k
  std::vector<mpq_class> alpha, beta;   // index 1..k (index 0 holds alpha, beta)
  std::vector<mpz_class> mass_F;        // <A 1_{E_{j-1}}, 1_{F_j}>, index 1..k
  std::vector<mpz_class> mass_E;        // <A 1_{E_j}, 1_{F_j}>, index 1..k; index 0 is the full mass

  const mpz_class& mass() const { return mass_E.at(0); }
  /// Recorded lower-bound constants: alpha_j / 2 >= c_alpha(j) alpha and
  /// beta_j / 2 >= c_beta(j) beta.
  static mpq_class c_alpha(int j);
  static mpq_class c_beta(int j);
  /// Mass retention factors for properties (iii) and (vi).
  static mpq_class retention_F(int j);
  static mpq_class retention_E(int j);
};

/// Throws HypothesisError if E or F is empty or the pairing vanishes.
Refinement refine(const SparseSet& E, const SparseSet& F, const Curve& c, std::int64_t N, int k);

struct PropertyCheck {
  std::string name;
  bool ok = true;
  std::int64_t instances = 0;
  std::string detail;
};

/// Recomputes properties (i)-(vi) for every level from the definitions.
std::vector<PropertyCheck> check_refinement(const Refinement& r);

/// A* 1_F(y) = #{n : y + gamma(n) in F}
std::int64_t backward_hits(const std::vector<LatticePoint>& gammas, const SparseSet& F, const LatticePoint& y);
/// A 1_E(x) = #{n : x - gamma(n) in E}
std::int64_t forward_hits(const std::vector<LatticePoint>& gammas, const SparseSet& E, const LatticePoint& x);

enum class Direction { B, A };

/// Parameters n_{j+1} (direction B) or m_{j+1} (direction A) that keep the
/// flow inside the refined sets: for a prefix of length 2j the point
/// y + gamma(n_1) - ... - gamma(m_j) + gamma(n) must lie in F_{k-j}; for a
/// prefix of length 2j+1, subtracting gamma(m) must land in E_{k-j-1}.
struct Slice {
  std::vector<std::int64_t> prefix;
  Direction direction = Direction::B;
  std::vector<std::int64_t> members;
};

Slice slice_members(const LatticePoint& y, const std::vector<std::int64_t>& prefix, Direction direction,
                    const Refinement& r);

/// Removes every m with gamma(n_1) - gamma(m_1) + ... + gamma(n_k) - gamma(m) = 0
/// from the last A slice. `removed` is filled with the dropped parameters.
Slice prune_last_slice(const LatticePoint& y, const Slice& slice, const Refinement& r,
                       std::vector<std::int64_t>* removed = nullptr);

/// y + gamma(n_1) - gamma(m_1) + ... + gamma(n_k) - gamma(m_k)
LatticePoint psi(const LatticePoint& y, const std::vector<std::int64_t>& chain, const Curve& c);

struct Tower {
  std::int64_t size = 0;                         // |T|
  std::map<LatticePoint, std::int64_t> images;   // Psi value -> number of chains
  std::vector<std::int64_t> min_b, min_a;        // smallest slice per level 1..k (index 0 unused)
  std::int64_t max_removed = 0;                  // largest pruned set seen
  std::int64_t nodes = 0;
  bool budget_hit = false;
};

/// Depth-first walk of all chains with the last slice pruned; only images are
/// stored. Stops (budget_hit = true) once |T| exceeds `budget`.
Tower build_tower(const LatticePoint& y, const Refinement& r, std::uint64_t budget, int threads = 0);

struct Multiplicity {
  std::int64_t m = 0;
  LatticePoint witness;  // smallest point attaining m
};
/// Throws HypothesisError on an empty tower.
Multiplicity multiplicity(const std::map<LatticePoint, std::int64_t>& images);

struct SubcriticalOptions {
  std::size_t y_cap = 32;              // y values sampled from E_k
  std::uint64_t tower_budget = 50'000'000;
  int threads = 0;
};

struct YResult {
  LatticePoint y;
  std::int64_t tower_size = 0;
  std::int64_t image_count = 0;  // |Psi(T)|
  Multiplicity mult;
  std::vector<std::int64_t> min_b, min_a;
  std::int64_t max_removed = 0;
  bool budget_hit = false;
};

struct SubcriticalReport {
  std::string curve;
  std::int64_t N = 0;
  int k = 0;
  std::size_t size_E = 0, size_F = 0;
  mpz_class mass;
  mpq_class alpha, beta;
  bool matches_theorem_case = false;
  bool trivial_regime = false;
  std::string trivial_reason;
  int fibre_bound = 0;
  std::vector<std::size_t> sizes_E, sizes_F;         // j = 0..k
  std::vector<mpq_class> alpha_j, beta_j;             // j = 1..k
  std::vector<YResult> ys;
  mpq_class constant;                                 // C in alpha^k beta^k <= C m |E|
  std::vector<PropertyCheck> checks;
  bool budget_hit = false;

  bool ok() const;
  /// The y with the largest multiplicity (first in sampling order on ties).
  const YResult* chosen() const;
  std::string to_json() const;
  std::string to_text() const;
};

SubcriticalReport verify_subcritical_instance(const SparseSet& E, const SparseSet& F, const Curve& c, std::int64_t N,
                                              int k, const SubcriticalOptions& opt = {});

}  // namespace lpi
