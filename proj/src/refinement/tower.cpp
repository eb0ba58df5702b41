#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#include <omp.h>

#include "lpi/errors.hpp"
#include "lpi/refinement.hpp"

namespace lpi {

namespace {

constexpr std::int64_t kUnvisited = std::numeric_limits<std::int64_t>::max();

// Point reached after the prefix, alternating +gamma(n), -gamma(m).
LatticePoint walk(const LatticePoint& y, const std::vector<std::int64_t>& prefix, const Refinement& r) {
  LatticePoint p = y;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const std::int64_t n = prefix[i];
    if (n < 1 || n > r.N) throw HypothesisError("chain parameter " + std::to_string(n) + " outside [1,N]");
    const LatticePoint& g = r.gammas[static_cast<std::size_t>(n - 1)];
    p = i % 2 == 0 ? p + g : p - g;
  }
  return p;
}

struct Walker {
  const Refinement& r;
  const LatticePoint& y;
  std::uint64_t budget;
  Tower t;

  explicit Walker(const Refinement& r_, const LatticePoint& y_, std::uint64_t b) : r(r_), y(y_), budget(b) {
    t.min_b.assign(static_cast<std::size_t>(r.k + 1), kUnvisited);
    t.min_a.assign(static_cast<std::size_t>(r.k + 1), kUnvisited);
  }

  // p is the point after `depth` steps; level i = depth/2 + 1.
  void dfs(int depth, const LatticePoint& p) {
    if (t.budget_hit) return;
    ++t.nodes;
    const int j = depth / 2;
    const std::size_t level = static_cast<std::size_t>(j + 1);
    if (depth % 2 == 0) {
      const SparseSet& target = r.F[static_cast<std::size_t>(r.k - j)];
      std::int64_t cnt = 0;
      for (std::int64_t n = 1; n <= r.N; ++n) {
        const LatticePoint q = p + r.gammas[static_cast<std::size_t>(n - 1)];
        if (!target.contains(q)) continue;
        ++cnt;
        dfs(depth + 1, q);
        if (t.budget_hit) return;
      }
      t.min_b[level] = std::min(t.min_b[level], cnt);
      return;
    }
    const SparseSet& target = r.E[static_cast<std::size_t>(r.k - j - 1)];
    const bool last = depth == 2 * r.k - 1;
    std::int64_t cnt = 0, removed = 0;
    for (std::int64_t m = 1; m <= r.N; ++m) {
      const LatticePoint q = p - r.gammas[static_cast<std::size_t>(m - 1)];
      if (!target.contains(q)) continue;
      if (last) {
        if (q == y) {
          ++removed;
          continue;
        }
        ++cnt;
        ++t.size;
        ++t.images[q];
        if (static_cast<std::uint64_t>(t.size) > budget) {
          t.budget_hit = true;
          return;
        }
      } else {
        ++cnt;
        dfs(depth + 1, q);
        if (t.budget_hit) return;
      }
    }
    t.min_a[level] = std::min(t.min_a[level], cnt);
    t.max_removed = std::max(t.max_removed, removed);
  }
};

void merge_into(Tower& acc, const Tower& part) {
  acc.size += part.size;
  acc.nodes += part.nodes;
  acc.max_removed = std::max(acc.max_removed, part.max_removed);
  for (std::size_t i = 0; i < acc.min_b.size(); ++i) {
    acc.min_b[i] = std::min(acc.min_b[i], part.min_b[i]);
    acc.min_a[i] = std::min(acc.min_a[i], part.min_a[i]);
  }
  for (const auto& [p, c] : part.images) acc.images[p] += c;
}

}  // namespace

Slice slice_members(const LatticePoint& y, const std::vector<std::int64_t>& prefix, Direction direction,
                    const Refinement& r) {
  const std::size_t L = prefix.size();
  if (L >= static_cast<std::size_t>(2 * r.k)) throw HypothesisError("prefix longer than 2k - 1");
  const Direction expected = L % 2 == 0 ? Direction::B : Direction::A;
  if (direction != expected) throw HypothesisError("slice direction does not match the prefix parity");
  if (L == 0 && !r.E.back().contains(y)) throw HypothesisError("y must lie in E_k");
  const LatticePoint p = walk(y, prefix, r);
  const int j = static_cast<int>(L / 2);
  Slice s{prefix, direction, {}};
  if (direction == Direction::B) {
    const SparseSet& F = r.F[static_cast<std::size_t>(r.k - j)];
    for (std::int64_t n = 1; n <= r.N; ++n)
      if (F.contains(p + r.gammas[static_cast<std::size_t>(n - 1)])) s.members.push_back(n);
  } else {
    const SparseSet& E = r.E[static_cast<std::size_t>(r.k - j - 1)];
    for (std::int64_t m = 1; m <= r.N; ++m)
      if (E.contains(p - r.gammas[static_cast<std::size_t>(m - 1)])) s.members.push_back(m);
  }
  return s;
}

Slice prune_last_slice(const LatticePoint& y, const Slice& slice, const Refinement& r,
                       std::vector<std::int64_t>* removed) {
  if (slice.direction != Direction::A || slice.prefix.size() != static_cast<std::size_t>(2 * r.k - 1))
    throw HypothesisError("only the last A slice is pruned");
  const LatticePoint p = walk(y, slice.prefix, r);
  Slice out{slice.prefix, slice.direction, {}};
  for (auto m : slice.members) {
    if (p - r.gammas[static_cast<std::size_t>(m - 1)] == y) {
      if (removed) removed->push_back(m);
    } else {
      out.members.push_back(m);
    }
  }
  return out;
}

LatticePoint psi(const LatticePoint& y, const std::vector<std::int64_t>& chain, const Curve& c) {
  LatticePoint p = y;
  for (std::size_t i = 0; i < chain.size(); ++i) p = i % 2 == 0 ? p + c.at(chain[i]) : p - c.at(chain[i]);
  return p;
}

Tower build_tower(const LatticePoint& y, const Refinement& r, std::uint64_t budget, int threads) {
  if (r.k < 1) throw HypothesisError("tower needs k >= 1");
  if (!r.E.back().contains(y)) throw HypothesisError("y must lie in E_k");

  // First step split across threads; subtrees are merged in n_1 order so the
  // result, including where a budget cut lands, does not depend on threads.
  const Slice first = slice_members(y, {}, Direction::B, r);
  const std::size_t S = first.members.size();
  std::vector<Tower> parts(S);
  std::exception_ptr err;
  std::mutex mu;
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::size_t i = 0; i < S; ++i) {
    try {
      Walker w(r, y, budget);
      w.dfs(1, y + r.gammas[static_cast<std::size_t>(first.members[i] - 1)]);
      parts[i] = std::move(w.t);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  Walker root(r, y, budget);
  Tower& t = root.t;
  t.nodes = 1;
  t.min_b[1] = static_cast<std::int64_t>(S);
  for (auto& part : parts) {
    merge_into(t, part);
    if (part.budget_hit || static_cast<std::uint64_t>(t.size) > budget) {
      t.budget_hit = true;
      break;
    }
  }
  for (std::size_t i = 0; i < t.min_b.size(); ++i) {
    if (t.min_b[i] == kUnvisited) t.min_b[i] = -1;
    if (t.min_a[i] == kUnvisited) t.min_a[i] = -1;
  }
  return t;
}

Multiplicity multiplicity(const std::map<LatticePoint, std::int64_t>& images) {
  if (images.empty()) throw HypothesisError("multiplicity of an empty tower");
  Multiplicity best;
  for (const auto& [p, c] : images)
    if (c > best.m) best = {c, p};
  return best;
}

}  // namespace lpi
