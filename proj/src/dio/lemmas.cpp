#include <algorithm>
#include <chrono>

#include "internal.hpp"
#include "lpi/divisors.hpp"

namespace lpi {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked::sub(0, v) : v; }

// Integer roots in [lo, hi] of the int64 polynomial c (ascending powers).
// Nonzero roots divide the lowest nonzero coefficient once the power of n is
// split off; an identically zero polynomial has every point as a root.
std::int64_t count_roots(const std::vector<std::int64_t>& c, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return 0;
  std::size_t t = 0;
  while (t < c.size() && c[t] == 0) ++t;
  if (t == c.size()) return hi - lo + 1;
  std::int64_t count = (t > 0 && lo <= 0 && 0 <= hi) ? 1 : 0;
  if (t + 1 == c.size()) return count;  // c_t n^t with c_t != 0
  const std::int64_t bound = std::max(abs64(lo), abs64(hi));
  auto eval = [&](std::int64_t r) {
    std::int64_t v = 0;
    for (std::size_t i = c.size(); i-- > t;) v = add(mul(v, r), c[i]);
    return v;
  };
  for (std::int64_t d : divisors(c[t])) {
    if (d > bound) break;
    for (std::int64_t r : {d, -d})
      if (r >= lo && r <= hi && eval(r) == 0) ++count;
  }
  return count;
}

std::vector<std::int64_t> narrow_coeffs(const IntPoly& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p.coeffs()) out.push_back(checked::narrow(c));
  return out;
}

bool in_range(std::int64_t v, std::int64_t N) { return v >= 1 && v <= N; }

mpz_class power_bound(long c, std::int64_t N, int e) {
  mpz_class r = c;
  for (int i = 0; i < e; ++i) r *= static_cast<long>(N);
  return r;
}

bool outside(std::int64_t z, long c, std::int64_t N, int e) { return abs(mpz_class(static_cast<long>(z))) > power_bound(c, N, e); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_N(std::int64_t N) {
  if (N < 1) throw HypothesisError("N must be >= 1, got " + std::to_string(N));
}

}  // namespace

Lemma1Counter::Lemma1Counter(IntPoly P, std::int64_t N) : P_(std::move(P)), N_(N), dq_(difference_quotient(P_)) {
  require_N(N);
  shifted_.resize(static_cast<std::size_t>(2 * N - 1));
  for (std::int64_t h = -(N - 1); h <= N - 1; ++h)
    if (h != 0) shifted_[static_cast<std::size_t>(h + N - 1)] = narrow_coeffs(q2_along_shift(dq_, checked::widen(h)));
}

std::int64_t Lemma1Counter::count(std::int64_t z) const {
  if (z == 0) throw HypothesisError("lemma1 requires z != 0");
  std::int64_t total = 0;
  // P(n) - P(m) = Q2(n, m) (n - m): with d2 = n - m and d1 = Q2(n, m),
  // count n in range with Q2(n, n - d2) = d1.
  for_each_factorization2(z, [&](std::int64_t d1, std::int64_t d2) {
    if (d2 > N_ - 1 || d2 < -(N_ - 1)) return;
    std::vector<std::int64_t> g = shifted_[static_cast<std::size_t>(d2 + N_ - 1)];
    g[0] = sub(g[0], d1);
    total += count_roots(g, std::max<std::int64_t>(1, 1 + d2), std::min(N_, N_ + d2));
  });
  return total;
}

Lemma2Counter::Lemma2Counter(IntPoly P, std::int64_t N)
    : P_(std::move(P)), N_(N), dq_(difference_quotient(P_)), q3_(dq_.q3), table_lo_(-2 * N) {
  require_N(N);
  for (std::int64_t n = table_lo_; n <= 3 * N; ++n) table_.push_back(P_.eval_i64(n));
}

std::int64_t Lemma2Counter::count(std::int64_t z1, std::int64_t z2) const {
  if (z1 == 0 && z2 == 0) throw HypothesisError("lemma2 requires (z1, z2) != (0, 0)");
  const std::int64_t N = N_;
  std::int64_t total = 0;
  // w = n1 - m1 + n2 and m2 = w - z1; then
  //   Q3(n1, m1, n2) (n1 - m1)(m1 - n2) = R(w) = z2 - (P(w) - P(w - z1)).
  for (std::int64_t w = 2 - N; w <= 2 * N - 1; ++w) {
    const std::int64_t m2 = w - z1;
    if (!in_range(m2, N)) continue;
    const std::int64_t R = sub(z2, sub(p(w), p(m2)));
    if (R != 0) {
      for_each_factorization3(R, [&](std::int64_t d1, std::int64_t d2, std::int64_t d3) {
        const std::int64_t n1 = w + d3, m1 = w - d2 + d3, n2 = w - d2;
        if (!in_range(n1, N) || !in_range(m1, N) || !in_range(n2, N)) return;
        if (q3_.eval(n1, m1, n2) == d1) ++total;
      });
    } else {
      // n1 = m1, m1 = n2 or Q3 = 0
      for (std::int64_t n1 = 1; n1 <= N; ++n1)
        for (std::int64_t m1 = 1; m1 <= N; ++m1) {
          const std::int64_t n2 = w - n1 + m1;
          if (!in_range(n2, N)) continue;
          if (n1 == m1 || m1 == n2 || q3_.eval(n1, m1, n2) == 0) ++total;
        }
    }
  }
  return total;
}

Lemma3Counter::Lemma3Counter(std::int64_t N) : N_(N) {
  require_N(N);
  // M reaches about 10 N^3 times the target scale; keep well inside int64.
  if (N > 100000) throw OverflowError("lemma3 counter supports N <= 100000");
}

mpz_class Lemma3Counter::cell_value(std::int64_t u, std::int64_t t, std::int64_t z1, std::int64_t z2, std::int64_t z3) {
  const mpz_class U = static_cast<long>(u), T = static_cast<long>(t), Z1 = static_cast<long>(z1),
                  Z2 = static_cast<long>(z2), Z3 = static_cast<long>(z3);
  const mpz_class v = U - Z1;
  return 3 * T * (U * U - Z2 - v * v) + 2 * (Z3 + v * v * v - U * U * U);
}

namespace {

bool solves_system(std::int64_t n1, std::int64_t m1, std::int64_t n2, std::int64_t m2, std::int64_t n3, std::int64_t m3,
                   std::int64_t z1, std::int64_t z2, std::int64_t z3) {
  const std::int64_t n[3] = {n1, n2, n3}, m[3] = {m1, m2, m3}, z[3] = {z1, z2, z3};
  for (unsigned e = 1; e <= 3; ++e) {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i) s = sub(add(s, checked::ipow(n[i], e)), checked::ipow(m[i], e));
    if (s != z[e - 1]) return false;
  }
  return true;
}

}  // namespace

bool FactorCell::consistent(std::int64_t z1, std::int64_t z2, std::int64_t z3) const {
  return M == Lemma3Counter::cell_value(u, t, z1, z2, z3);
}

std::int64_t Lemma3Counter::count(std::int64_t z1, std::int64_t z2, std::int64_t z3, Lemma3Stats* stats,
                                  std::vector<FactorCell>* cells) const {
  if (z1 == 0 && z2 == 0 && z3 == 0) throw HypothesisError("lemma3 requires (z1, z2, z3) != (0, 0, 0)");
  const std::int64_t N = N_;
  Lemma3Stats st;
  std::int64_t total = 0;
  for (std::int64_t u = 2 - N; u <= 2 * N - 1; ++u) {
    const std::int64_t v = sub(u, z1);
    // A = u^2 - z2 - (u - z1)^2, B = z3 + (u - z1)^3 - u^3
    const std::int64_t A = sub(sub(mul(u, u), z2), mul(v, v));
    const std::int64_t B = sub(add(z3, mul(mul(v, v), v)), mul(mul(u, u), u));
    for (std::int64_t t = 2; t <= 2 * N; ++t) {
      const std::int64_t n3 = t - u + z1;
      if (!in_range(n3, N)) continue;
      ++st.cells;
      const std::int64_t M = add(mul(mul(3, t), A), mul(2, B));
      if (M != 0) {
        if (M % 6 != 0) continue;
        // 6 (n1 + n2 - t)(n1 - m1)(m1 - n2) = M
        for_each_factorization3(M / 6, [&](std::int64_t d1, std::int64_t d2, std::int64_t d3) {
          ++st.factorizations;
          const std::int64_t m1 = u - d2 + d3;
          if (2 * m1 + d2 - d3 - t != d1) return;
          const std::int64_t n1 = m1 + d2, n2 = m1 - d3;
          if (!in_range(n1, N) || !in_range(m1, N) || !in_range(n2, N)) return;
          // 2 (m2 - n3)(n3 - m3) = 2 d2 d3 + A
          const std::int64_t rhs = add(mul(2, mul(d2, d3)), A);
          auto try_tail = [&](std::int64_t m2, std::int64_t m3, std::vector<std::int64_t> ds) {
            if (!in_range(m2, N) || !in_range(m3, N) || !solves_system(n1, m1, n2, m2, n3, m3, z1, z2, z3)) return;
            ++total;
            if (cells) cells->push_back({u, t, mpz_class(static_cast<long>(M)), std::move(ds)});
          };
          if (rhs != 0) {
            if (rhs % 2 != 0) return;
            for_each_factorization2(rhs / 2, [&](std::int64_t d4, std::int64_t d5) {
              const std::int64_t m2 = n3 + d4, m3 = n3 - d5;
              if (m2 + m3 == t) try_tail(m2, m3, {d1, d2, d3, d4, d5});
            });
          } else {
            try_tail(n3, t - n3, {d1, d2, d3});                    // m2 = n3
            if (t - n3 != n3) try_tail(t - n3, n3, {d1, d2, d3});  // m3 = n3, not already counted
          }
        });
      } else {
        ++st.zero_cells;
        // n3 and m3 = t - m2 are forced; n1 + n2 = u + m1 and
        // n1^2 + n2^2 = K leave a quadratic in n1.
        for (std::int64_t m1 = 1; m1 <= N; ++m1)
          for (std::int64_t m2 = 1; m2 <= N; ++m2) {
            const std::int64_t m3 = t - m2;
            if (!in_range(m3, N)) continue;
            const std::int64_t c = u + m1;
            const std::int64_t K = add(z2, m2 * m2 - n3 * n3 + m3 * m3 + m1 * m1);
            const std::int64_t disc = sub(mul(2, K), c * c);
            if (disc < 0) continue;
            const std::int64_t s = checked::isqrt(disc);
            if (s * s != disc || (c + s) % 2 != 0) continue;
            for (std::int64_t n1 : {(c + s) / 2, (c - s) / 2}) {
              const std::int64_t n2 = c - n1;
              if (in_range(n1, N) && in_range(n2, N) && solves_system(n1, m1, n2, m2, n3, m3, z1, z2, z3)) {
                ++total;
                if (cells) cells->push_back({u, t, mpz_class(0), {}});
              }
              if (s == 0) break;
            }
          }
      }
    }
  }
  if (stats) *stats = st;
  return total;
}

CountRecord count_lemma1(const IntPoly& P, std::int64_t z, std::int64_t N, const CountOptions& opt) {
  if (P.degree() < 2) throw HypothesisError("lemma1 requires deg P >= 2");
  if (z == 0) throw HypothesisError("lemma1 requires z != 0");
  const auto t0 = std::chrono::steady_clock::now();
  CountRecord rec;
  rec.curve = P.to_string();
  rec.mode = CountMode::inhomogeneous;
  rec.s_or_k = 1;
  rec.N = N;
  rec.z = {z};
  rec.method = CountMethod::lemma1;
  rec.outside_hypothesis = outside(z, opt.range_slack, N, P.degree());
  rec.count = mpz_class(static_cast<long>(Lemma1Counter(P, N).count(z)));
  rec.elapsed = seconds_since(t0);
  return rec;
}

CountRecord count_lemma2(const IntPoly& P, std::int64_t z1, std::int64_t z2, std::int64_t N, const CountOptions& opt) {
  if (P.degree() < 2) throw HypothesisError("lemma2 requires deg P >= 2");
  if (z1 == 0 && z2 == 0) throw HypothesisError("lemma2 requires (z1, z2) != (0, 0)");
  const auto t0 = std::chrono::steady_clock::now();
  CountRecord rec;
  rec.curve = "n," + P.to_string();
  rec.mode = CountMode::inhomogeneous;
  rec.s_or_k = 2;
  rec.N = N;
  rec.z = {z1, z2};
  rec.method = CountMethod::lemma2;
  rec.outside_hypothesis = outside(z1, opt.range_slack, N, 1) || outside(z2, opt.range_slack, N, P.degree());
  rec.count = mpz_class(static_cast<long>(Lemma2Counter(P, N).count(z1, z2)));
  rec.elapsed = seconds_since(t0);
  return rec;
}

CountRecord count_lemma3(std::int64_t z1, std::int64_t z2, std::int64_t z3, std::int64_t N, const CountOptions& opt) {
  if (z1 == 0 && z2 == 0 && z3 == 0) throw HypothesisError("lemma3 requires (z1, z2, z3) != (0, 0, 0)");
  const auto t0 = std::chrono::steady_clock::now();
  CountRecord rec;
  rec.curve = "n,n^2,n^3";
  rec.mode = CountMode::inhomogeneous;
  rec.s_or_k = 3;
  rec.N = N;
  rec.z = {z1, z2, z3};
  rec.method = CountMethod::lemma3;
  rec.outside_hypothesis = outside(z1, opt.range_slack, N, 1) || outside(z2, opt.range_slack, N, 2) ||
                           outside(z3, opt.range_slack, N, 3);
  rec.count = mpz_class(static_cast<long>(Lemma3Counter(N).count(z1, z2, z3)));
  rec.elapsed = seconds_since(t0);
  return rec;
}

}  // namespace lpi
