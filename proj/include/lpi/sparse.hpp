#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lpi/lattice_point.hpp"

namespace lpi {

/// Finite subset of Z^d. Points are kept sorted (lexicographic) and
/// deduplicated; membership goes through a hash index.
class SparseSet {
 public:
  SparseSet() = default;
  explicit SparseSet(std::size_t dim) : dim_(dim) {}
  SparseSet(std::size_t dim, std::vector<LatticePoint> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const LatticePoint& p) const { return index_.count(p) != 0; }

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Subset of points satisfying `keep`, order preserved.
  template <class Pred>
  SparseSet filter(Pred&& keep) const {
    SparseSet out(dim_);
    for (const auto& p : points_)
      if (keep(p)) out.points_.push_back(p);
    out.rebuild_index();
    return out;
  }

  bool is_subset_of(const SparseSet& other) const;
  SparseSet translated(const LatticePoint& v) const;
  SparseSet negated() const;

  friend bool operator==(const SparseSet& a, const SparseSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  void rebuild_index();
  std::size_t dim_ = 0;
  std::vector<LatticePoint> points_;
  std::unordered_set<LatticePoint, LatticePointHash> index_;
};

/// Axis-parallel integer box prod_j [lo_j, hi_j]; never materialized unless
/// asked to.
class BoxSet {
 public:
  BoxSet(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);
  /// prod_j [-h_j, h_j]
  static BoxSet centered(const std::vector<std::int64_t>& half_sides);

  std::size_t dim() const noexcept { return lo_.size(); }
  const std::vector<std::int64_t>& lo() const noexcept { return lo_; }
  const std::vector<std::int64_t>& hi() const noexcept { return hi_; }
  mpz_class size() const;
  bool contains(const LatticePoint& p) const;
  /// Throws BudgetExceeded when the box has more than `max_points` points.
  SparseSet materialize(std::uint64_t max_points) const;

 private:
  std::vector<std::int64_t> lo_, hi_;
};

/// Either representation; operators accept both.
using LatticeSet = std::variant<SparseSet, BoxSet>;
std::size_t set_dim(const LatticeSet& s);
mpz_class set_size(const LatticeSet& s);
bool set_contains(const LatticeSet& s, const LatticePoint& p);

/// Finitely supported Q-valued function on Z^d; explicit zeros are dropped.
class SparseFunction {
 public:
  using Map = std::unordered_map<LatticePoint, mpq_class, LatticePointHash>;

  SparseFunction() = default;
  explicit SparseFunction(std::size_t dim) : dim_(dim) {}
  static SparseFunction indicator(const SparseSet& s);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t support_size() const noexcept { return values_.size(); }
  bool is_zero() const noexcept { return values_.empty(); }

  mpq_class value(const LatticePoint& p) const;
  /// f(p) += v
  void add(const LatticePoint& p, const mpq_class& v);
  void set(const LatticePoint& p, const mpq_class& v);

  const Map& values() const noexcept { return values_; }
  /// Entries sorted by point.
  std::vector<std::pair<LatticePoint, mpq_class>> sorted_entries() const;
  mpq_class total() const;

  SparseFunction scaled(const mpq_class& c) const;
  friend SparseFunction operator+(const SparseFunction& a, const SparseFunction& b);
  friend bool operator==(const SparseFunction& a, const SparseFunction& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  void check_dim(const LatticePoint& p) const;
  std::size_t dim_ = 0;
  Map values_;
};

}  // namespace lpi
