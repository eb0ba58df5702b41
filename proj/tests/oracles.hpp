#pragma once

// Brute-force oracles written against plain integers only: curves are
// coefficient lists, counts come from full tuple enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficients, constant first
using Curve = std::vector<Poly>;
using Point = std::vector<std::int64_t>;

inline std::int64_t eval(const Poly& p, std::int64_t n) {
  std::int64_t v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * n + *it;
  return v;
}

inline Point at(const Curve& c, std::int64_t n) {
  Point p;
  for (const auto& q : c) p.push_back(eval(q, n));
  return p;
}

/// Histogram of sum gamma(n_i) - sum gamma(m_i) over [1,N]^{2k}.
inline std::map<Point, std::int64_t> difference_histogram(const Curve& c, int k, std::int64_t N) {
  std::vector<Point> g;
  for (std::int64_t n = 1; n <= N; ++n) g.push_back(at(c, n));
  std::map<Point, std::int64_t> h;
  Point acc(c.size(), 0);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == 2 * k) {
      ++h[acc];
      return;
    }
    const int sign = slot < k ? 1 : -1;
    for (const auto& p : g) {
      for (std::size_t j = 0; j < p.size(); ++j) acc[j] += sign * p[j];
      rec(slot + 1);
      for (std::size_t j = 0; j < p.size(); ++j) acc[j] -= sign * p[j];
    }
  };
  rec(0);
  return h;
}

inline std::int64_t count(const std::map<Point, std::int64_t>& h, const Point& z) {
  auto it = h.find(z);
  return it == h.end() ? 0 : it->second;
}

/// #{(n, m) in [1,N]^{2s} : sum gamma(n_i) = sum gamma(m_i)}
inline std::int64_t J(const Curve& c, int s, std::int64_t N) {
  return count(difference_histogram(c, s, N), Point(c.size(), 0));
}

/// #{(y, n) : y in E, n in [1,N], y + gamma(n) in F}
template <class InF>
std::int64_t incidence(const Curve& c, std::int64_t N, const std::vector<Point>& E, InF&& in_F) {
  std::int64_t s = 0;
  for (const auto& y : E)
    for (std::int64_t n = 1; n <= N; ++n) {
      Point x = y;
      const Point g = at(c, n);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += g[j];
      s += in_F(x);
    }
  return s;
}

}  // namespace oracle
