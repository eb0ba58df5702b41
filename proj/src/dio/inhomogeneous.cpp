#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include <boost/sort/spreadsort/integer_sort.hpp>

#include "internal.hpp"

namespace lpi {

namespace {

struct LayerBest {
  std::int64_t count = 0;
  std::optional<LatticePoint> witness;

  // Larger count wins; ties go to the lexicographically smaller witness.
  void offer(std::int64_t c, const LatticePoint& z) {
    const LatticePoint neg = -z;
    const LatticePoint& w = neg < z ? neg : z;
    if (c > count || (c == count && c > 0 && (!witness || w < *witness))) {
      count = c;
      witness = w;
    }
  }
  void merge(const LayerBest& o) {
    if (o.witness) offer(o.count, *o.witness);
  }
};

struct Layout {
  std::size_t d = 0;
  std::vector<std::int64_t> first;        // first coordinate of each group
  std::vector<std::size_t> start;         // group g spans [start[g], start[g+1])
  std::vector<std::int64_t> group_of;     // first-coordinate offset -> group index or -1
  std::int64_t first_lo = 0;
  std::vector<std::int64_t> rest_span;    // R_j: max - min of coordinate j >= 1
  std::vector<std::uint64_t> radix;       // mixed-radix weights for the packed key
  unsigned weight_bits = 0;
  bool packed = false;
};

Layout make_layout(const SumMultiset& h, std::size_t d) {
  Layout L;
  L.d = d;
  for (std::size_t i = 0; i < h.points.size(); ++i) {
    if (L.first.empty() || h.points[i][0] != L.first.back()) {
      L.first.push_back(h.points[i][0]);
      L.start.push_back(i);
    }
  }
  L.start.push_back(h.points.size());
  L.first_lo = L.first.front();
  L.group_of.assign(static_cast<std::size_t>(L.first.back() - L.first_lo + 1), -1);
  for (std::size_t g = 0; g < L.first.size(); ++g)
    L.group_of[static_cast<std::size_t>(L.first[g] - L.first_lo)] = static_cast<std::int64_t>(g);

  std::int64_t wmax = 0;
  for (auto w : h.weights) wmax = std::max(wmax, w);
  L.weight_bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(wmax) * static_cast<std::uint64_t>(wmax)));

  unsigned __int128 space = 1;
  for (std::size_t j = 1; j < d; ++j) {
    std::int64_t lo = h.points[0][j], hi = lo;
    for (const auto& p : h.points) {
      lo = std::min(lo, p[j]);
      hi = std::max(hi, p[j]);
    }
    L.rest_span.push_back(hi - lo);
    L.radix.push_back(static_cast<std::uint64_t>(space));
    space *= static_cast<unsigned __int128>(2 * (hi - lo) + 1);
  }
  L.packed = (space << L.weight_bits) <= (static_cast<unsigned __int128>(1) << 64) && L.weight_bits < 64;
  return L;
}

LatticePoint unpack(const Layout& L, std::int64_t z1, std::uint64_t key) {
  LatticePoint z(L.d);
  z[0] = z1;
  for (std::size_t j = L.d; j-- > 1;) {
    const std::uint64_t digit = key / L.radix[j - 1];
    key %= L.radix[j - 1];
    z[j] = static_cast<std::int64_t>(digit) - L.rest_span[j - 1];
  }
  return z;
}

// Counts for every z = (z1, *) through packed keys: key in the high bits,
// product of weights in the low bits, then one radix sort and a run scan.
LayerBest layer_packed(const SumMultiset& h, const Layout& L, std::int64_t z1, std::vector<std::uint64_t>& items) {
  items.clear();
  const std::size_t d = L.d;
  for (std::size_t ga = 0; ga < L.first.size(); ++ga) {
    const std::int64_t off = L.first[ga] - z1 - L.first_lo;
    if (off < 0 || off >= static_cast<std::int64_t>(L.group_of.size())) continue;
    const std::int64_t gb = L.group_of[static_cast<std::size_t>(off)];
    if (gb < 0) continue;
    for (std::size_t a = L.start[ga]; a < L.start[ga + 1]; ++a) {
      const auto& pa = h.points[a];
      const std::uint64_t wa = static_cast<std::uint64_t>(h.weights[a]);
      for (std::size_t b = L.start[gb]; b < L.start[gb + 1]; ++b) {
        const auto& pb = h.points[b];
        std::uint64_t key = 0;
        for (std::size_t j = 1; j < d; ++j)
          key += static_cast<std::uint64_t>(pa[j] - pb[j] + L.rest_span[j - 1]) * L.radix[j - 1];
        items.push_back((key << L.weight_bits) | (wa * static_cast<std::uint64_t>(h.weights[b])));
      }
    }
  }
  boost::sort::spreadsort::integer_sort(items.begin(), items.end());

  std::uint64_t zero_key = 0;
  for (std::size_t j = 1; j < d; ++j) zero_key += static_cast<std::uint64_t>(L.rest_span[j - 1]) * L.radix[j - 1];
  const std::uint64_t mask = L.weight_bits ? (~std::uint64_t{0} >> (64 - L.weight_bits)) : 0;

  LayerBest best;
  for (std::size_t i = 0; i < items.size();) {
    const std::uint64_t key = items[i] >> L.weight_bits;
    std::int64_t sum = 0;
    while (i < items.size() && (items[i] >> L.weight_bits) == key) sum += static_cast<std::int64_t>(items[i++] & mask);
    if (z1 == 0 && key == zero_key) continue;
    if (sum >= best.count) best.offer(sum, unpack(L, z1, key));
  }
  return best;
}

// Same result without packing, for spans that do not fit in 64 bits.
LayerBest layer_generic(const SumMultiset& h, const Layout& L, std::int64_t z1) {
  std::map<LatticePoint, std::int64_t> counts;
  for (std::size_t ga = 0; ga < L.first.size(); ++ga) {
    const std::int64_t off = L.first[ga] - z1 - L.first_lo;
    if (off < 0 || off >= static_cast<std::int64_t>(L.group_of.size())) continue;
    const std::int64_t gb = L.group_of[static_cast<std::size_t>(off)];
    if (gb < 0) continue;
    for (std::size_t a = L.start[ga]; a < L.start[ga + 1]; ++a)
      for (std::size_t b = L.start[gb]; b < L.start[gb + 1]; ++b)
        counts[h.points[a] - h.points[b]] += h.weights[a] * h.weights[b];
  }
  LayerBest best;
  for (const auto& [z, c] : counts)
    if (!z.is_zero() && c >= best.count) best.offer(c, z);
  return best;
}

}  // namespace

MaxInhomogeneous max_inhomogeneous(const Curve& c, int k, std::int64_t N, const CountOptions& opt) {
  c.require_valid();
  if (k < 1) throw HypothesisError("k must be >= 1");
  const SumMultiset h = k_fold_sums(c, k, N, opt);
  const Layout L = make_layout(h, c.dim());

  MaxInhomogeneous out;
  out.distinct_sums = h.points.size();
  const std::int64_t span = L.first.back() - L.first.front();

  // Work estimate: number of (a, b) pairs over all visited layers.
  std::vector<std::uint64_t> layer_items(static_cast<std::size_t>(span + 1), 0);
  for (std::size_t ga = 0; ga < L.first.size(); ++ga)
    for (std::size_t gb = 0; gb < L.first.size(); ++gb) {
      const std::int64_t z1 = L.first[ga] - L.first[gb];
      if (z1 < 0) continue;
      layer_items[static_cast<std::size_t>(z1)] +=
          static_cast<std::uint64_t>(L.start[ga + 1] - L.start[ga]) * (L.start[gb + 1] - L.start[gb]);
    }
  for (auto n : layer_items) out.pair_items += n;
  detail::require_budget(out.pair_items, opt, "max_inhomogeneous pair scan");

  std::vector<LayerBest> per_layer(static_cast<std::size_t>(span + 1));
  detail::ExceptionSlot slot;
  const int threads = detail::thread_count(opt);
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> items;
#pragma omp for schedule(dynamic)
    for (std::int64_t z1 = 0; z1 <= span; ++z1) {
      slot.run([&] {
        if (layer_items[static_cast<std::size_t>(z1)] == 0) return;
        per_layer[static_cast<std::size_t>(z1)] = L.packed ? layer_packed(h, L, z1, items) : layer_generic(h, L, z1);
      });
    }
  }
  slot.rethrow();

  LayerBest best;
  for (const auto& b : per_layer) best.merge(b);
  out.count = best.count;
  out.z = best.witness ? *best.witness : LatticePoint(c.dim());
  return out;
}

}  // namespace lpi
