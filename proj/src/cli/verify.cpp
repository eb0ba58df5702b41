#include <random>

#include "lpi/analysis.hpp"
#include "lpi/cli.hpp"
#include "lpi/count.hpp"
#include "lpi/errors.hpp"
#include "lpi/exponents.hpp"
#include "lpi/operators.hpp"
#include "lpi/transform.hpp"

namespace lpi::cli {

bool SuiteResult::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poly_curve", "lattice_ops", "dio_count", "refinement", "analysis"};
  return names;
}

const std::vector<std::string>& fault_names() {
  // count-offset: lemma counts are off by one; shear-sign: the pulled-back
  // side of shear transport uses -b.
  static const std::vector<std::string> names = {"count-offset", "shear-sign"};
  return names;
}

namespace {

struct Check {
  PropertyCheck c;
  explicit Check(std::string name) { c.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++c.instances;
    if (!ok && c.ok) {
      c.ok = false;
      c.detail = what;
    }
  }
};

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

SparseFunction random_function(std::size_t d, std::mt19937_64& rng) {
  SparseFunction f(d);
  const int n = static_cast<int>(uniform(rng, 4, 12));
  for (int i = 0; i < n; ++i) {
    LatticePoint p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = uniform(rng, -6, 6);
    f.set(p, mpq_class(static_cast<long>(uniform(rng, -5, 5)), static_cast<unsigned long>(uniform(rng, 1, 3))));
  }
  return f;
}

// nonzero values on most of [-2,2]^d
SparseFunction dense_function(std::size_t d, std::mt19937_64& rng) {
  SparseFunction f(d);
  LatticePoint p(d);
  for (std::size_t j = 0; j < d; ++j) p[j] = -2;
  for (;;) {
    if (rng() % 4 != 0) f.set(p, static_cast<long>(uniform(rng, 1, 9)));
    std::size_t j = 0;
    while (j < d && ++p[j] == 3) p[j++] = -2;
    if (j == d) break;
  }
  return f;
}

SparseSet random_set(std::size_t d, std::int64_t side, double density, std::mt19937_64& rng) {
  std::vector<LatticePoint> pts;
  LatticePoint p(d);
  for (;;) {
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) pts.push_back(p);
    std::size_t j = 0;
    while (j < d && ++p[j] == side) p[j++] = 0;
    if (j == d) break;
  }
  if (pts.empty()) pts.push_back(LatticePoint(d));
  return SparseSet(d, std::move(pts));
}

std::vector<PropertyCheck> poly_curve_suite(std::mt19937_64& rng) {
  Check round("polynomial print/parse round trip"), crit("critical exponent 2 - 1/D"),
      vertex("critical vertex on the critical boundary"), diag("diagonal interior is supercritical"),
      reduce("canonical reduction maps back onto the input");
  for (const char* t : {"n^2", "2n^3-n", "n^2+n", "-3n^5+7n-1", "n"}) {
    const IntPoly p = parse_poly(t);
    round.expect(parse_poly(p.to_string()) == p, t);
  }
  for (int D = 1; D <= 12; ++D) {
    crit.expect(critical_exponent_for_degree(D) == 2 - mpq_class(1, D), "D = " + std::to_string(D));
    const mpq_class v(D, 2 * D - 1);
    vertex.expect(classify_exponents(D, ExponentPair(v, 1 - v)) == Region::critical_boundary,
                  "D = " + std::to_string(D));
    for (int i = 1; i < 8; ++i)
      diag.expect(classify_exponents(D, ExponentPair(mpq_class(i, 8), mpq_class(i, 8))) == Region::supercritical,
                  "D = " + std::to_string(D));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Curve base = trial % 2 ? Curve::moment(2) : Curve::moment(3);
    const std::size_t d = base.dim();
    std::vector<mpz_class> factors(d), offset(d);
    for (std::size_t j = 0; j < d; ++j) {
      factors[j] = static_cast<long>(uniform(rng, 1, 3) * (rng() % 2 ? 1 : -1));
      offset[j] = static_cast<long>(uniform(rng, -5, 5));
    }
    AffineTransform T({Dilation{factors}});
    for (std::size_t t = 1; t < d; ++t) T.then(Shear{t, t - 1, static_cast<long>(uniform(rng, -4, 4))});
    T.then(Translation{offset});
    const Curve input = apply_transform(base, T);
    const Reduction r = reduce_canonical(input);
    reduce.expect(r.diagnostic.empty() && r.reduced.is_separated() && apply_transform(r.reduced, r.transform) == input,
                  input.to_string());
  }
  return {round.c, crit.c, vertex.c, diag.c, reduce.c};
}

std::vector<PropertyCheck> lattice_suite(std::mt19937_64& rng) {
  Check adj("<A f, g> = <f, A* g>"), norm("A_N = A / N"), inc("box incidence closed form");
  for (int trial = 0; trial < 20; ++trial) {
    const Curve c = trial % 2 ? Curve::moment(2) : parse_curve("n^2");
    const std::int64_t N = uniform(rng, 1, 6);
    const SparseFunction f = random_function(c.dim(), rng), g = random_function(c.dim(), rng);
    adj.expect(pairing(average_unnormalized(c, N, f), g) == pairing(f, adjoint_unnormalized(c, N, g)),
               "trial " + std::to_string(trial));
    norm.expect(average(c, N, f) == average_unnormalized(c, N, f).scaled(mpq_class(1, static_cast<unsigned long>(N))),
                "trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Curve c = Curve::moment(2);
    const std::int64_t N = uniform(rng, 1, 5);
    const BoxSet E({uniform(rng, -4, 0), uniform(rng, -8, 0)}, {uniform(rng, 0, 4), uniform(rng, 0, 8)});
    const BoxSet F({uniform(rng, -2, 2), uniform(rng, -2, 6)}, {uniform(rng, 2, 7), uniform(rng, 6, 30)});
    const SparseSet Es = E.materialize(10'000), Fs = F.materialize(10'000);
    inc.expect(incidence(c, N, E, F) == incidence(c, N, Es, Fs), "trial " + std::to_string(trial));
  }
  return {adj.c, norm.c, inc.c};
}

std::vector<PropertyCheck> dio_suite(std::mt19937_64& rng, bool offset, int threads) {
  Check l1("lemma1 counter = brute force"), l2("lemma2 counter = brute force"), l3("lemma3 counter = brute force"),
      j1("J_1 = N for injective curves"), mitm("mitm = brute force"), total("sum over z of counts = N^{2k}");
  CountOptions opt;
  opt.threads = threads;
  const std::int64_t bump = offset ? 1 : 0;
  for (const char* P : {"n^2", "n^3", "2n^3-n"}) {
    const Curve c = parse_curve(P);
    const std::int64_t N = 6;
    const Lemma1Counter L(c.component(0), N);
    for (std::int64_t z = -40; z <= 40; ++z) {
      if (z == 0) continue;
      const auto brute = count_inhomogeneous(c, 1, N, LatticePoint{z}, CountMethod::brute, opt).count;
      l1.expect(brute == L.count(z) + bump, std::string(P) + " z = " + std::to_string(z));
    }
  }
  {
    const Curve c = Curve::moment(2);
    const Lemma2Counter L(parse_poly("n^2"), 4);
    for (std::int64_t z1 = -4; z1 <= 4; ++z1)
      for (std::int64_t z2 = -12; z2 <= 12; ++z2) {
        if (z1 == 0 && z2 == 0) continue;
        const auto brute = count_inhomogeneous(c, 2, 4, LatticePoint{z1, z2}, CountMethod::brute, opt).count;
        l2.expect(brute == L.count(z1, z2) + bump, "z = (" + std::to_string(z1) + "," + std::to_string(z2) + ")");
      }
  }
  {
    const Curve c = Curve::moment(3);
    const Lemma3Counter L(4);
    for (int t = 0; t < 40; ++t) {
      const std::int64_t z1 = uniform(rng, -4, 4), z2 = uniform(rng, -16, 16), z3 = uniform(rng, -64, 64);
      if (z1 == 0 && z2 == 0 && z3 == 0) continue;
      const auto brute = count_inhomogeneous(c, 3, 4, LatticePoint{z1, z2, z3}, CountMethod::brute, opt).count;
      l3.expect(brute == L.count(z1, z2, z3) + bump,
                "z = (" + std::to_string(z1) + "," + std::to_string(z2) + "," + std::to_string(z3) + ")");
    }
  }
  for (const char* text : {"n", "n^2", "n,n^2", "n,n^2,n^3"}) {
    const Curve c = parse_curve(text);
    for (std::int64_t N : {1, 5, 17}) {
      j1.expect(count_homogeneous(c, 1, N, CountMethod::mitm, opt).count == N, text);
      for (int s : {1, 2})
        mitm.expect(count_homogeneous(c, s, std::min<std::int64_t>(N, 7), CountMethod::mitm, opt).count ==
                        count_homogeneous(c, s, std::min<std::int64_t>(N, 7), CountMethod::brute, opt).count,
                    text);
    }
  }
  {
    const Curve c = parse_curve("n^2");
    const std::int64_t N = 5;
    mpz_class sum = 0;
    for (std::int64_t z = -2 * 25; z <= 2 * 25; ++z)
      sum += count_inhomogeneous(c, 2, N, LatticePoint{z}, CountMethod::mitm, opt).count;
    total.expect(sum == 625, "n^2, k = 2, N = 5");
  }
  return {l1.c, l2.c, l3.c, j1.c, mitm.c, total.c};
}

std::vector<PropertyCheck> refinement_suite(std::mt19937_64& rng, int threads) {
  Check suite("subcritical chain on random instances"), witness("structured witness tower size");
  const Curve c = Curve::moment(2);
  SubcriticalOptions opt;
  opt.threads = threads;
  opt.y_cap = 8;
  for (int t = 0; t < 6; ++t) {
    const int k = 1 + t % 2;
    const SparseSet E = random_set(2, 8, 0.4, rng), F = random_set(2, 8, 0.4, rng);
    const auto rep = verify_subcritical_instance(E, F, c, 8, k, opt);
    std::string bad;
    for (const auto& ch : rep.checks)
      if (!ch.ok) bad = ch.name + ": " + ch.detail;
    suite.expect(rep.ok(), bad);
  }
  {
    const std::int64_t N = 8;
    std::vector<LatticePoint> pts;
    for (const auto& g : c.samples(N)) pts.push_back(-g);
    const SparseSet E(2, pts), F(2, {LatticePoint(2)});
    const Refinement r = refine(E, F, c, N, 1);
    std::int64_t sum = 0;
    for (const auto& y : r.E.back()) sum += build_tower(y, r, 1'000'000, threads).size;
    witness.expect(sum == N * (N - 1), "sum of |T(y)| = " + std::to_string(sum));
  }
  return {suite.c, witness.c};
}

std::vector<PropertyCheck> analysis_suite(std::mt19937_64& rng, bool shear_fault) {
  Check dirac("dirac ratio = N^{-1/q'}"), dual("dual ratio = N^{-1/p}"), shear("shear transport"),
      dil("dilation decomposition"), vertex("diagram vertex labelled critical");
  const ExponentPair e(mpq_class(2, 3), mpq_class(1, 3));
  for (const char* text : {"n^2", "n,n^2", "n,n^2,n^3"}) {
    const Curve c = parse_curve(text);
    for (std::int64_t N = 4; N <= 16; ++N) {
      const auto a = make_extremizer(ExtremizerKind::dirac, c, N);
      dirac.expect(rwt_ratio_exact(a.E, a.F, e, c, N).equals_power_of(N, -e.inv_q_dual()), text);
      const auto b = make_extremizer(ExtremizerKind::curve_image_dual, c, N);
      dual.expect(rwt_ratio_exact(b.E, b.F, e, c, N).equals_power_of(N, -e.inv_p()), text);
    }
    const RieszTable t = riesz_diagram_data(c, 6);
    vertex.expect(t.rows.back().region == Region::critical_boundary, text);
  }
  for (int t = 0; t < 10; ++t) {
    const Curve c = t % 2 ? Curve::moment(2) : parse_curve("n^2");
    // N = 1 makes the operator a translation, which hides a sign error
    const std::int64_t N = uniform(rng, 3, 6);
    const unsigned q = 2 + static_cast<unsigned>(t % 2);
    const SparseFunction f = random_function(c.dim(), rng);
    if (c.dim() == 2) {
      // dense support so translates overlap; sparse f has a curve-independent norm
      const SparseFunction h = dense_function(2, rng);
      const long b = static_cast<long>(uniform(rng, 1, 3)) * (rng() % 2 ? 1 : -1);
      for (unsigned qq : {2u, 3u}) {
        NormIdentity id = shear_transport(c, Shear{1, 0, b}, N, h, qq);
        if (shear_fault) id.rhs = shear_transport(c, Shear{1, 0, -b}, N, h, qq).rhs;
        shear.expect(id.holds(), "b = " + std::to_string(b) + ", q = " + std::to_string(qq));
      }
    }
    dil.expect(dilation_decomposition(c, 0, uniform(rng, 1, 4), N, f, q).holds(), "trial " + std::to_string(t));
  }
  return {dirac.c, dual.c, shear.c, dil.c, vertex.c};
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, const std::string& fault, int threads) {
  std::mt19937_64 rng(seed);
  SuiteResult r{name, {}};
  if (name == "poly_curve") r.checks = poly_curve_suite(rng);
  else if (name == "lattice_ops") r.checks = lattice_suite(rng);
  else if (name == "dio_count") r.checks = dio_suite(rng, fault == "count-offset", threads);
  else if (name == "refinement") r.checks = refinement_suite(rng, threads);
  else if (name == "analysis") r.checks = analysis_suite(rng, fault == "shear-sign");
  else throw HypothesisError("unknown suite '" + name + "'");
  return r;
}

}  // namespace lpi::cli
