// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "lpi/count.hpp"
#include "lpi/refinement.hpp"

namespace {

lpi::CountOptions options(std::int64_t parallel) {
  lpi::CountOptions o;
  o.exec = parallel ? lpi::Exec::parallel : lpi::Exec::serial;
  return o;
}

void BM_CountHomogeneous(benchmark::State& st) {
  const lpi::Curve c = lpi::parse_curve("n^3");
  const auto opt = options(st.range(1));
  for (auto _ : st)
    benchmark::DoNotOptimize(lpi::count_homogeneous(c, 2, st.range(0), lpi::CountMethod::mitm, opt).count);
}
BENCHMARK(BM_CountHomogeneous)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CountBrute(benchmark::State& st) {
  const lpi::Curve c = lpi::Curve::moment(2);
  const auto opt = options(st.range(1));
  for (auto _ : st)
    benchmark::DoNotOptimize(lpi::count_homogeneous(c, 2, st.range(0), lpi::CountMethod::brute, opt).count);
}
BENCHMARK(BM_CountBrute)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MaxInhomogeneous(benchmark::State& st) {
  const lpi::Curve c = lpi::Curve::moment(2);
  const auto opt = options(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(lpi::max_inhomogeneous(c, 2, st.range(0), opt).count);
}
BENCHMARK(BM_MaxInhomogeneous)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BuildTower(benchmark::State& st) {
  std::mt19937_64 rng(2024);
  std::vector<lpi::LatticePoint> e, f;
  for (std::int64_t x = 0; x < 24; ++x)
    for (std::int64_t y = 0; y < 300; ++y) {
      if (rng() % 100 < 35) e.push_back({x, y});
      if (rng() % 100 < 35) f.push_back({x, y});
    }
  const lpi::Curve c = lpi::Curve::moment(2);
  const lpi::Refinement r = lpi::refine(lpi::SparseSet(2, e), lpi::SparseSet(2, f), c, 16, 2);
  const lpi::LatticePoint y = r.E.back().points()[r.E.back().size() / 2];
  // threads = 1 runs the walk serially
  const int threads = st.range(0) ? 0 : 1;
  for (auto _ : st) benchmark::DoNotOptimize(lpi::build_tower(y, r, 50'000'000, threads).size);
}
BENCHMARK(BM_BuildTower)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
