#include <numeric>

#include "lpi/analysis.hpp"
#include "lpi/errors.hpp"
#include "lpi/operators.hpp"

namespace lpi {

std::string to_string(ExtremizerKind k) {
  switch (k) {
    case ExtremizerKind::dirac: return "dirac";
    case ExtremizerKind::curve_image_dual: return "curve_image_dual";
    case ExtremizerKind::parabolic_box: return "parabolic_box";
  }
  return "?";
}

ExtremizerKind parse_extremizer_kind(const std::string& s) {
  if (s == "dirac") return ExtremizerKind::dirac;
  if (s == "curve_image_dual" || s == "dual") return ExtremizerKind::curve_image_dual;
  if (s == "parabolic_box" || s == "box") return ExtremizerKind::parabolic_box;
  throw ParseError("unknown extremizer family '" + s + "'", 0);
}

ExtremizerSets make_extremizer(ExtremizerKind kind, const Curve& c, std::int64_t N, const mpq_class& c_box) {
  c.require_valid();
  if (N < 1) throw HypothesisError("N must be >= 1");
  const std::size_t d = c.dim();
  const SparseSet origin(d, {LatticePoint(d)});
  switch (kind) {
    case ExtremizerKind::dirac: return {origin, SparseSet(d, c.samples(N))};
    case ExtremizerKind::curve_image_dual: {
      std::vector<LatticePoint> pts;
      for (const auto& g : c.samples(N)) pts.push_back(-g);
      return {SparseSet(d, std::move(pts)), origin};
    }
    case ExtremizerKind::parabolic_box: {
      if (c_box <= 0) throw HypothesisError("c_box must be positive");
      std::vector<std::int64_t> half;
      for (const auto& p : c.components()) {
        mpz_class Nd;
        mpz_ui_pow_ui(Nd.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(p.degree()));
        const mpq_class h = c_box * Nd;
        half.push_back(checked::narrow(mpz_class(h.get_num() / h.get_den())));
      }
      const BoxSet b = BoxSet::centered(half);
      return {b, b};
    }
  }
  throw InternalError("unhandled extremizer kind");
}

namespace {

mpq_class qpow(const mpq_class& b, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), e);
  return rational(n, d);
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

bool RwtRatio::equals_power_of(std::int64_t N, const mpq_class& a) const {
  if (pairing == 0) return false;
  // pairing^L == N^{aL} |E|^{L/p} |F|^{L/q'} with every exponent integral
  const mpz_class L = lcm(lcm(inv_p.get_den(), inv_q_dual.get_den()), a.get_den());
  if (!L.fits_ulong_p() || L > 1'000'000) throw OverflowError("exponent denominators too large for an exact check");
  const unsigned long l = L.get_ui();
  const mpz_class ea = a.get_num() * (L / a.get_den());
  const mpz_class ep = inv_p.get_num() * (L / inv_p.get_den());
  const mpz_class eq = inv_q_dual.get_num() * (L / inv_q_dual.get_den());
  mpq_class lhs = qpow(pairing, l);
  mpq_class rhs = qpow(mpq_class(size_E), ep.get_ui()) * qpow(mpq_class(size_F), eq.get_ui());
  const mpq_class n(static_cast<long>(N));
  if (ea >= 0)
    rhs *= qpow(n, ea.get_ui());
  else
    lhs *= qpow(n, mpz_class(-ea).get_ui());
  return lhs == rhs;
}

RwtRatio rwt_ratio_exact(const LatticeSet& E, const LatticeSet& F, const ExponentPair& e, const Curve& c,
                         std::int64_t N) {
  RwtRatio r;
  r.size_E = set_size(E);
  r.size_F = set_size(F);
  if (r.size_E == 0 || r.size_F == 0) throw HypothesisError("rwt ratio needs nonempty E and F");
  r.pairing = rational(incidence(c, N, E, F), static_cast<long>(N));
  r.inv_p = e.inv_p();
  r.inv_q_dual = e.inv_q_dual();
  r.value = to_real(r.pairing) / (rational_pow(to_real(r.size_E), r.inv_p) * rational_pow(to_real(r.size_F), r.inv_q_dual));
  return r;
}

Real rwt_ratio(const LatticeSet& E, const LatticeSet& F, const ExponentPair& e, const Curve& c, std::int64_t N) {
  return rwt_ratio_exact(E, F, e, c, N).value;
}

Real moment_norm(const Curve& c, int s, std::int64_t N, const CountOptions& opt) {
  if (s < 1) throw HypothesisError("s must be >= 1");
  const CountRecord rec = count_homogeneous(c, s, N, CountMethod::mitm, opt);
  return rational_pow(to_real(rec.count), mpq_class(1, 2 * s)) / Real(N);
}

}  // namespace lpi
