#include "lpi/exponents.hpp"

#include <string>

#include "lpi/errors.hpp"

namespace lpi {

ExponentPair::ExponentPair(mpq_class inv_p, mpq_class inv_q)
    : inv_p_(std::move(inv_p)), inv_q_(std::move(inv_q)) {
  inv_p_.canonicalize();
  inv_q_.canonicalize();
  if (inv_p_ < 0 || inv_p_ > 1 || inv_q_ < 0 || inv_q_ > 1)
    throw HypothesisError("exponent pair outside [0,1]^2: (" + inv_p_.get_str() + ", " + inv_q_.get_str() + ")");
}

ExponentPair ExponentPair::from_pq(const mpq_class& p, const mpq_class& q) {
  if (p < 1 || q < 1) throw HypothesisError("exponents must be >= 1");
  return ExponentPair(1 / p, 1 / q);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ParseError("invalid rational '" + s + "'", 0);
  q.canonicalize();
  return q;
}

mpq_class parse_inverse_exponent(std::string_view text) {
  if (text == "inf" || text == "infinity") return 0;
  const mpq_class p = parse_rational(text);
  if (p < 1) throw HypothesisError("exponent must be >= 1, got " + p.get_str());
  return 1 / p;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::outside: return "outside";
    case Region::supercritical: return "supercritical";
    case Region::critical_boundary: return "critical_boundary";
    case Region::subcritical: return "subcritical";
  }
  return "?";
}

mpq_class critical_exponent_for_degree(int D) {
  if (D < 1) throw HypothesisError("total degree must be >= 1");
  return 2 - mpq_class(1, D);
}

mpq_class critical_exponent(const Curve& c) { return critical_exponent_for_degree(c.total_degree()); }

Region classify_exponents(int D, const ExponentPair& e) {
  if (D < 1) throw HypothesisError("total degree must be >= 1");
  if (e.inv_q() > e.inv_p()) return Region::outside;
  // D/q vs (D-1)/p, and its dual D/p' vs (D-1)/q'.
  const int c1 = cmp(mpq_class(D * e.inv_q()), mpq_class((D - 1) * e.inv_p()));
  const int c2 = cmp(mpq_class(D * e.inv_p_dual()), mpq_class((D - 1) * e.inv_q_dual()));
  if (c1 > 0 && c2 > 0) return Region::supercritical;
  if (c1 == 0 || c2 == 0) return Region::critical_boundary;
  return Region::subcritical;
}

Real conjectured_constant(int D, const ExponentPair& e, std::int64_t N) {
  if (N < 1) throw HypothesisError("N must be >= 1");
  const Real n(N);
  return rational_pow(n, -D * e.inv_r()) + rational_pow(n, -e.inv_q_dual()) + rational_pow(n, -e.inv_p());
}

std::string to_string(DominantTerm t) {
  switch (t) {
    case DominantTerm::box: return "N^-D(1/p-1/q)";
    case DominantTerm::dirac: return "N^-1/q'";
    case DominantTerm::dual: return "N^-1/p";
  }
  return "?";
}

DominantTerm dominant_term(int D, const ExponentPair& e) {
  const mpq_class box = -D * e.inv_r();
  const mpq_class dirac = -e.inv_q_dual();
  const mpq_class dual = -e.inv_p();
  if (box >= dirac && box >= dual) return DominantTerm::box;
  if (dirac >= dual) return DominantTerm::dirac;
  return DominantTerm::dual;
}

}  // namespace lpi
