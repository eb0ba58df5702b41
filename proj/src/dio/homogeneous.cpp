#include <algorithm>
#include <chrono>

#include "internal.hpp"

namespace lpi {

namespace detail {

GammaTable::GammaTable(const Curve& c, std::int64_t N_, int terms) : d(c.dim()), N(N_) {
  if (N < 1) throw HypothesisError("N must be >= 1, got " + std::to_string(N));
  if (terms < 1) throw HypothesisError("number of summands must be >= 1");
  v.reserve(static_cast<std::size_t>(N) * d);
  const std::int64_t limit = (std::int64_t{1} << 61) / (2 * static_cast<std::int64_t>(terms));
  for (std::int64_t n = 1; n <= N; ++n) {
    const LatticePoint p = c.at(n);
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] > limit || p[j] < -limit)
        throw OverflowError("curve values too large for exact int64 sums at n=" + std::to_string(n));
      v.push_back(p[j]);
    }
  }
}

std::uint64_t saturating_pow(std::int64_t N, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<unsigned __int128>(N);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

void require_budget(std::uint64_t work, const CountOptions& opt, const char* what) {
  if (work > opt.budget_tuples)
    throw BudgetExceeded(std::string(what) + " needs " + (work == UINT64_MAX ? ">2^64" : std::to_string(work)) +
                         " tuples, budget is " + std::to_string(opt.budget_tuples));
}

}  // namespace detail

namespace {

using detail::GammaTable;

// Counts (n_1, m_1, ..., n_k, m_k) with sum gamma(n_i) - gamma(m_i) == target,
// slot by slot; acc holds the running sum for each depth.
std::int64_t brute_rec(const GammaTable& g, int slots, int depth, std::int64_t* acc, const std::int64_t* target) {
  const std::size_t d = g.d;
  const std::int64_t* cur = acc + static_cast<std::size_t>(depth) * d;
  std::int64_t* next = acc + static_cast<std::size_t>(depth + 1) * d;
  const bool plus = depth % 2 == 0;
  std::int64_t total = 0;
  for (std::int64_t n = 1; n <= g.N; ++n) {
    const std::int64_t* r = g.row(n);
    for (std::size_t j = 0; j < d; ++j) next[j] = plus ? cur[j] + r[j] : cur[j] - r[j];
    if (depth + 1 == slots) {
      total += std::equal(next, next + d, target);
    } else {
      total += brute_rec(g, slots, depth + 1, acc, target);
    }
  }
  return total;
}

std::int64_t brute_count(const GammaTable& g, int k, const std::vector<std::int64_t>& target, const CountOptions& opt) {
  const int slots = 2 * k;
  const std::size_t d = g.d;
  std::int64_t total = 0;
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(detail::thread_count(opt))
  for (std::int64_t n1 = 1; n1 <= g.N; ++n1) {
    slot.run([&] {
      std::vector<std::int64_t> acc(static_cast<std::size_t>(slots + 1) * d, 0);
      const std::int64_t* r = g.row(n1);
      for (std::size_t j = 0; j < d; ++j) acc[d + j] = r[j];
      if (slots == 1)
        total += std::equal(acc.begin() + d, acc.begin() + 2 * d, target.begin());
      else
        total += brute_rec(g, slots, 1, acc.data(), target.data());
    });
  }
  slot.rethrow();
  return total;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SumMultiset k_fold_sums(const Curve& c, int k, std::int64_t N, const CountOptions& opt) {
  c.require_valid();
  const GammaTable g(c, N, 2 * k);
  const std::uint64_t tuples = detail::saturating_pow(N, k);
  detail::require_budget(tuples, opt, "k-fold sum enumeration");
  const std::size_t d = g.d;
  std::vector<LatticePoint> all(tuples);
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(static) num_threads(detail::thread_count(opt))
  for (std::uint64_t i = 0; i < tuples; ++i) {
    slot.run([&] {
      LatticePoint p(d);
      std::uint64_t rest = i;
      for (int t = 0; t < k; ++t) {
        const std::int64_t n = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(N)) + 1;
        rest /= static_cast<std::uint64_t>(N);
        const std::int64_t* r = g.row(n);
        for (std::size_t j = 0; j < d; ++j) p[j] += r[j];
      }
      all[i] = std::move(p);
    });
  }
  slot.rethrow();
  std::sort(all.begin(), all.end());
  SumMultiset out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    out.points.push_back(all[i]);
    out.weights.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

CountRecord count_homogeneous(const Curve& c, int s, std::int64_t N, CountMethod method, const CountOptions& opt) {
  c.require_valid();
  if (s < 1) throw HypothesisError("s must be >= 1");
  if (N < 1) throw HypothesisError("N must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  CountRecord rec;
  rec.curve = c.to_string();
  rec.mode = CountMode::homogeneous;
  rec.s_or_k = s;
  rec.N = N;
  rec.method = method;
  if (method == CountMethod::brute) {
    detail::require_budget(detail::saturating_pow(N, 2 * s), opt, "brute-force count");
    const GammaTable g(c, N, 2 * s);
    rec.count = mpz_class(static_cast<long>(brute_count(g, s, std::vector<std::int64_t>(c.dim(), 0), opt)));
  } else if (method == CountMethod::mitm) {
    const SumMultiset h = k_fold_sums(c, s, N, opt);
    mpz_class total = 0;
    for (auto w : h.weights) total += mpz_class(static_cast<long>(w)) * static_cast<long>(w);
    rec.count = total;
  } else {
    throw HypothesisError("homogeneous counts support brute or mitm, not " + to_string(method));
  }
  rec.elapsed = seconds_since(t0);
  return rec;
}

CountRecord count_inhomogeneous(const Curve& c, int k, std::int64_t N, const LatticePoint& z, CountMethod method,
                                const CountOptions& opt) {
  c.require_valid();
  if (k < 1) throw HypothesisError("k must be >= 1");
  if (N < 1) throw HypothesisError("N must be >= 1");
  if (z.dim() != c.dim())
    throw HypothesisError("target " + z.to_string() + " does not match curve dimension " + std::to_string(c.dim()));
  const auto t0 = std::chrono::steady_clock::now();
  CountRecord rec;
  rec.curve = c.to_string();
  rec.mode = CountMode::inhomogeneous;
  rec.s_or_k = k;
  rec.N = N;
  rec.z.assign(z.coords().begin(), z.coords().end());
  rec.method = method;
  if (method == CountMethod::brute) {
    detail::require_budget(detail::saturating_pow(N, 2 * k), opt, "brute-force count");
    const GammaTable g(c, N, 2 * k);
    rec.count = mpz_class(static_cast<long>(brute_count(g, k, rec.z, opt)));
  } else if (method == CountMethod::mitm) {
    const SumMultiset h = k_fold_sums(c, k, N, opt);
    mpz_class total = 0;
    for (std::size_t i = 0; i < h.points.size(); ++i) {
      // partner b = a - z
      const LatticePoint b = h.points[i] - z;
      auto it = std::lower_bound(h.points.begin(), h.points.end(), b);
      if (it != h.points.end() && *it == b)
        total += mpz_class(static_cast<long>(h.weights[i])) * static_cast<long>(h.weights[it - h.points.begin()]);
    }
    rec.count = total;
  } else {
    throw HypothesisError("generic inhomogeneous counts support brute or mitm; use the lemma entry points for " +
                          to_string(method));
  }
  rec.elapsed = seconds_since(t0);
  return rec;
}

}  // namespace lpi
