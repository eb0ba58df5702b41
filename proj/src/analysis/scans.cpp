#include <random>
#include <sstream>

#include <omp.h>

#include "lpi/analysis.hpp"
#include "lpi/errors.hpp"
#include "lpi/operators.hpp"

namespace lpi {

std::string RieszTable::to_csv() const {
  std::ostringstream os;
  os << "inv_p,inv_q,region,dominant_term\n";
  for (const auto& r : rows)
    os << r.inv_p.get_str() << ',' << r.inv_q.get_str() << ',' << to_string(r.region) << ',' << to_string(r.dominant)
       << '\n';
  return os.str();
}

RieszTable riesz_diagram_data(const Curve& c, int resolution) {
  c.require_valid();
  if (resolution < 2) throw HypothesisError("resolution must be >= 2");
  const int D = c.total_degree();
  auto row = [&](const ExponentPair& e) { return RieszRow{e.inv_p(), e.inv_q(), classify_exponents(D, e), dominant_term(D, e)}; };
  RieszTable t;
  for (int i = 0; i <= resolution; ++i)
    for (int j = 0; j <= resolution; ++j) t.rows.push_back(row(ExponentPair(mpq_class(i, resolution), mpq_class(j, resolution))));
  const mpq_class inv_pc = 1 / critical_exponent(c);
  t.vertex = ExponentPair(inv_pc, 1 - inv_pc);
  t.rows.push_back(row(t.vertex));
  return t;
}

TheoremCase parse_theorem_case(const std::string& s) {
  if (s == "i") return TheoremCase::i;
  if (s == "ii") return TheoremCase::ii;
  if (s == "iii") return TheoremCase::iii;
  throw ParseError("unknown case '" + s + "' (expected i, ii or iii)", 0);
}

std::string to_string(TheoremCase t) {
  switch (t) {
    case TheoremCase::i: return "i";
    case TheoremCase::ii: return "ii";
    case TheoremCase::iii: return "iii";
  }
  return "?";
}

namespace {

mpq_class case_theta(TheoremCase which, const Curve& c) {
  const IntPoly n = IntPoly::monomial(1, 1);
  switch (which) {
    case TheoremCase::i:
      if (c.dim() != 1 || c.component(0).degree() < 2) throw HypothesisError("case i needs a curve P(n) with deg P >= 2");
      return mpq_class(2, 3);
    case TheoremCase::ii:
      if (c.dim() != 2 || !(c.component(0) == n) || c.component(1).degree() < 2)
        throw HypothesisError("case ii needs a curve (n, P(n)) with deg P >= 2");
      return mpq_class(3, 5);
    case TheoremCase::iii:
      if (!(c == Curve::moment(3))) throw HypothesisError("case iii needs the curve n,n^2,n^3");
      return mpq_class(4, 7);
  }
  throw InternalError("unhandled case");
}

// Uniform random subset of [0,N)^d, each point kept with probability 1/2.
SparseSet random_subset(std::size_t d, std::int64_t N, std::mt19937_64& rng) {
  std::vector<LatticePoint> pts;
  LatticePoint p(d);
  std::uint64_t bits = 0;
  int left = 0;
  for (;;) {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    if (bits & 1) pts.push_back(p);
    bits >>= 1;
    --left;
    std::size_t j = 0;
    while (j < d && ++p[j] == N) p[j++] = 0;
    if (j == d) break;
  }
  if (pts.empty()) pts.push_back(LatticePoint(d));
  return SparseSet(d, std::move(pts));
}

Real theta_ratio(const LatticeSet& E, const LatticeSet& F, const Curve& c, std::int64_t N, const mpq_class& theta) {
  const mpq_class pairing(incidence(c, N, E, F), mpz_class(static_cast<long>(N)));
  return to_real(pairing) /
         (rational_pow(to_real(set_size(E)), theta) * rational_pow(to_real(set_size(F)), theta));
}

}  // namespace

ScanReport theorem_consistency_scan(TheoremCase which, const Curve& c, const std::vector<std::int64_t>& Ns,
                                    int trials, std::uint64_t seed, int threads) {
  c.require_valid();
  if (trials < 0) throw HypothesisError("trials must be >= 0");
  ScanReport rep;
  rep.which = which;
  rep.curve = c.to_string();
  rep.theta = case_theta(which, c);
  rep.reference_slope = -rep.theta;
  rep.seed = seed;
  rep.trials = trials;
  rep.Ns = Ns;

  // cells: 3 witnesses then the random trials, per N
  const int per_N = 3 + trials;
  const std::size_t cells = Ns.size() * static_cast<std::size_t>(per_N);
  std::vector<Real> value(cells);
  std::vector<std::string> source(cells);
  std::exception_ptr err;
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::size_t i = 0; i < cells; ++i) {
    try {
      const std::int64_t N = Ns[i / static_cast<std::size_t>(per_N)];
      const int cell = static_cast<int>(i % static_cast<std::size_t>(per_N));
      if (cell < 3) {
        const auto kind = static_cast<ExtremizerKind>(cell);
        const auto sets = make_extremizer(kind, c, N);
        value[i] = theta_ratio(sets.E, sets.F, c, N, rep.theta);
        source[i] = to_string(kind);
      } else {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(cell)};
        std::mt19937_64 rng(ss);
        const SparseSet E = random_subset(c.dim(), N, rng), F = random_subset(c.dim(), N, rng);
        value[i] = theta_ratio(E, F, c, N, rep.theta);
        source[i] = "random";
      }
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  std::vector<std::pair<std::int64_t, Real>> pts;
  for (std::size_t a = 0; a < Ns.size(); ++a) {
    const std::size_t base = a * static_cast<std::size_t>(per_N);
    std::size_t best = base;
    for (std::size_t i = base + 1; i < base + static_cast<std::size_t>(per_N); ++i)
      if (value[i] > value[best]) best = i;
    rep.max_ratio.push_back(value[best]);
    rep.max_source.push_back(source[best]);
    pts.emplace_back(Ns[a], value[best]);
  }
  rep.fit = fit_exponent(pts);
  return rep;
}

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "case " << to_string(which) << "  curve " << curve << "  theta=" << theta << "  seed=" << seed
     << "  trials=" << trials << "\n";
  for (std::size_t i = 0; i < Ns.size(); ++i)
    os << "  N=" << Ns[i] << "  max ratio " << max_ratio[i].str(12) << "  (" << max_source[i] << ")\n";
  os << "slope " << fit.slope << "  reference " << reference_slope.get_d() << "  max residual " << fit.max_residual
     << "\n";
  return os.str();
}

}  // namespace lpi
