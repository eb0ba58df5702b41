#include "lpi/refinement.hpp"

#include "lpi/errors.hpp"
#include "lpi/real.hpp"

namespace lpi {

namespace {

mpq_class pow2(int e) {
  mpq_class r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= 2;
  return e < 0 ? mpq_class(1 / r) : r;
}

mpz_class mass_of(const std::vector<LatticePoint>& gammas, const SparseSet& E, const SparseSet& F) {
  std::int64_t s = 0;
  for (const auto& x : F) s += forward_hits(gammas, E, x);
  return mpz_class(static_cast<long>(s));
}

mpq_class ratio(const mpz_class& a, std::size_t b) { return rational(a, mpz_class(static_cast<unsigned long>(b))); }

}  // namespace

mpq_class Refinement::c_alpha(int j) { return pow2(1 - 2 * j); }
mpq_class Refinement::c_beta(int j) { return pow2(-2 * j); }
mpq_class Refinement::retention_F(int j) { return pow2(-(2 * j - 1)); }
mpq_class Refinement::retention_E(int j) { return pow2(-2 * j); }

std::int64_t backward_hits(const std::vector<LatticePoint>& gammas, const SparseSet& F, const LatticePoint& y) {
  std::int64_t h = 0;
  for (const auto& g : gammas) h += F.contains(y + g);
  return h;
}

std::int64_t forward_hits(const std::vector<LatticePoint>& gammas, const SparseSet& E, const LatticePoint& x) {
  std::int64_t h = 0;
  for (const auto& g : gammas) h += E.contains(x - g);
  return h;
}

Refinement refine(const SparseSet& E, const SparseSet& F, const Curve& c, std::int64_t N, int k) {
  c.require_valid();
  if (E.empty() || F.empty()) throw HypothesisError("refinement needs nonempty E and F");
  if (E.dim() != c.dim() || F.dim() != c.dim()) throw HypothesisError("set dimension does not match the curve");
  if (k < 0) throw HypothesisError("k must be >= 0");
  if (N < 1) throw HypothesisError("N must be >= 1");

  Refinement r{c, N, k, c.samples(N), {E}, {F}, {}, {}, {}, {}};
  const mpz_class m0 = mass_of(r.gammas, E, F);
  if (m0 == 0) throw HypothesisError("alpha = beta = 0: no flow between E and F");
  r.alpha.push_back(ratio(m0, F.size()));
  r.beta.push_back(ratio(m0, E.size()));
  r.mass_F.push_back(m0);
  r.mass_E.push_back(m0);

  for (int j = 1; j <= k; ++j) {
    const SparseSet& Ep = r.E.back();
    const SparseSet& Fp = r.F.back();
    const mpq_class aj = ratio(r.mass_E.back(), Fp.size());
    const mpq_class half_a = aj / 2;
    SparseSet Fj = Fp.filter([&](const LatticePoint& x) { return forward_hits(r.gammas, Ep, x) > half_a; });
    const mpz_class mF = mass_of(r.gammas, Ep, Fj);
    const mpq_class bj = ratio(mF, Ep.size());
    const mpq_class half_b = bj / 2;
    SparseSet Ej = Ep.filter([&](const LatticePoint& y) { return backward_hits(r.gammas, Fj, y) > half_b; });
    const mpz_class mE = mass_of(r.gammas, Ej, Fj);
    r.alpha.push_back(aj);
    r.beta.push_back(bj);
    r.mass_F.push_back(mF);
    r.mass_E.push_back(mE);
    r.F.push_back(std::move(Fj));
    r.E.push_back(std::move(Ej));
  }
  return r;
}

std::vector<PropertyCheck> check_refinement(const Refinement& r) {
  auto named = [](const char* n) {
    PropertyCheck c;
    c.name = n;
    return c;
  };
  PropertyCheck c1 = named("refinement (i) F_j subset F_j-1"),
                c2 = named("refinement (ii) A 1_E_j-1 > alpha_j/2 >= c_alpha alpha on F_j"),
                c3 = named("refinement (iii) F-side mass retention"), c4 = named("refinement (iv) E_j subset E_j-1"),
                c5 = named("refinement (v) A* 1_F_j > beta_j/2 >= c_beta beta on E_j"),
                c6 = named("refinement (vi) E-side mass retention");
  auto fail = [](PropertyCheck& c, const std::string& why) {
    if (c.ok) c.detail = why;
    c.ok = false;
  };
  const mpz_class m0 = mass_of(r.gammas, r.E[0], r.F[0]);
  const mpq_class alpha = ratio(m0, r.F[0].size());
  const mpq_class beta = ratio(m0, r.E[0].size());
  for (int j = 1; j <= r.k; ++j) {
    const std::string lv = " at level " + std::to_string(j);
    const SparseSet &Ep = r.E[j - 1], &Fp = r.F[j - 1], &Ej = r.E[j], &Fj = r.F[j];

    ++c1.instances;
    if (!Fj.is_subset_of(Fp) || Fj.empty()) fail(c1, "F_j not a nonempty subset" + lv);
    ++c4.instances;
    if (!Ej.is_subset_of(Ep) || Ej.empty()) fail(c4, "E_j not a nonempty subset" + lv);

    const mpq_class aj = ratio(mass_of(r.gammas, Ep, Fp), Fp.size());
    if (aj / 2 < Refinement::c_alpha(j) * alpha) fail(c2, "alpha_j/2 below c_alpha alpha" + lv);
    for (const auto& x : Fj) {
      ++c2.instances;
      if (!(forward_hits(r.gammas, Ep, x) > aj / 2)) fail(c2, "point " + x.to_string() + lv);
    }
    const mpz_class mF = mass_of(r.gammas, Ep, Fj);
    ++c3.instances;
    if (mF < Refinement::retention_F(j) * m0) fail(c3, "mass " + mF.get_str() + " too small" + lv);

    const mpq_class bj = ratio(mF, Ep.size());
    if (bj / 2 < Refinement::c_beta(j) * beta) fail(c5, "beta_j/2 below c_beta beta" + lv);
    for (const auto& y : Ej) {
      ++c5.instances;
      if (!(backward_hits(r.gammas, Fj, y) > bj / 2)) fail(c5, "point " + y.to_string() + lv);
    }
    const mpz_class mE = mass_of(r.gammas, Ej, Fj);
    ++c6.instances;
    if (mE < Refinement::retention_E(j) * m0) fail(c6, "mass " + mE.get_str() + " too small" + lv);
  }
  return {c1, c2, c3, c4, c5, c6};
}

}  // namespace lpi
