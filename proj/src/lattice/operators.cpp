#include "lpi/operators.hpp"

#include <algorithm>
#include <variant>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

void require_N(std::int64_t N) {
  if (N < 1) throw HypothesisError("N must be >= 1, got " + std::to_string(N));
}

void require_dim(const Curve& c, std::size_t dim) {
  if (c.dim() != dim)
    throw HypothesisError("dimension mismatch: curve in Z^" + std::to_string(c.dim()) + ", data in Z^" +
                          std::to_string(dim));
}

// sum_n f(x -/+ gamma(n)) over the given parameters; sign = +1 shifts the
// support forward (average), -1 backward (adjoint).
SparseFunction shift_sum(const std::vector<LatticePoint>& gammas, const SparseFunction& f, int sign) {
  SparseFunction out(f.dim());
  for (const auto& [p, v] : f.values())
    for (const auto& g : gammas) out.add(sign > 0 ? p + g : p - g, v);
  return out;
}

}  // namespace

SparseFunction average_unnormalized(const Curve& c, std::int64_t N, const SparseFunction& f) {
  c.require_valid();
  require_N(N);
  require_dim(c, f.dim());
  return shift_sum(c.samples(N), f, +1);
}

SparseFunction average(const Curve& c, std::int64_t N, const SparseFunction& f) {
  return average_unnormalized(c, N, f).scaled(mpq_class(1, static_cast<unsigned long>(N)));
}

SparseFunction adjoint_unnormalized(const Curve& c, std::int64_t N, const SparseFunction& f) {
  c.require_valid();
  require_N(N);
  require_dim(c, f.dim());
  return shift_sum(c.samples(N), f, -1);
}

RestrictedSequence::RestrictedSequence(IntPoly q) : q_(std::move(q)) {
  if (q_.is_constant()) throw HypothesisError("restricting sequence needs a non-constant Q");
  if (q_.leading() < 0) throw HypothesisError("restricting sequence needs a positive leading coefficient");
}

std::vector<std::int64_t> RestrictedSequence::values(std::int64_t N) const {
  require_N(N);
  // For |n| > S + N, with S the sum of the non-leading |coefficients|,
  // |Q(n)| >= |n|^{deg-1} (|n| - S) > N, so the window below is exhaustive.
  mpz_class S = 0;
  for (int i = 0; i < q_.degree(); ++i) S += abs(q_.coeff(i));
  const mpz_class bound = S + N;
  const std::int64_t B = checked::narrow(bound);
  std::vector<std::int64_t> out;
  for (std::int64_t n = -B; n <= B; ++n) {
    const mpz_class v = q_.eval(checked::widen(n));
    if (v >= 1 && v <= N) out.push_back(v.get_si());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SparseFunction restricted_average(const Curve& c, const RestrictedSequence& seq, std::int64_t N,
                                  const SparseFunction& f) {
  c.require_valid();
  require_dim(c, f.dim());
  const auto xs = seq.values(N);
  if (xs.empty())
    throw HypothesisError("restricted sequence " + seq.generator().to_string() + " has no values in [1," +
                          std::to_string(N) + "]");
  std::vector<LatticePoint> gammas;
  gammas.reserve(xs.size());
  for (auto m : xs) gammas.push_back(c.at(m));
  return shift_sum(gammas, f, +1).scaled(mpq_class(1, static_cast<unsigned long>(xs.size())));
}

mpq_class pairing(const SparseFunction& f, const SparseFunction& g) {
  if (f.dim() != g.dim()) throw HypothesisError("dimension mismatch in pairing");
  const SparseFunction& small = f.support_size() <= g.support_size() ? f : g;
  const SparseFunction& large = &small == &f ? g : f;
  mpq_class s = 0;
  for (const auto& [p, v] : small.values()) {
    auto it = large.values().find(p);
    if (it != large.values().end()) s += v * it->second;
  }
  return s;
}

LqExponent LqExponent::of(const mpq_class& q) {
  if (q < 1) throw HypothesisError("lq exponent must be >= 1, got " + q.get_str());
  LqExponent e;
  e.q = q;
  e.q.canonicalize();
  return e;
}

LqExponent LqExponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return inf();
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw ParseError("invalid exponent '" + std::string(text) + "'", 0);
  q.canonicalize();
  return of(q);
}

mpq_class lq_norm_pow(const SparseFunction& f, unsigned q) {
  if (q < 1) throw HypothesisError("lq exponent must be >= 1");
  mpq_class s = 0;
  for (const auto& [p, v] : f.values()) {
    mpq_class a = abs(v), t = 1;
    for (unsigned i = 0; i < q; ++i) t *= a;
    s += t;
  }
  return s;
}

Real lq_norm(const SparseFunction& f, const LqExponent& q) {
  if (q.infinite) {
    mpq_class m = 0;
    for (const auto& [p, v] : f.values()) m = std::max<mpq_class>(m, abs(v));
    return to_real(m);
  }
  if (q.q < 1) throw HypothesisError("lq exponent must be >= 1, got " + q.q.get_str());
  if (f.is_zero()) return Real(0);
  const mpq_class inv = 1 / q.q;
  if (q.is_integer()) return rational_pow(to_real(lq_norm_pow(f, static_cast<unsigned>(q.q.get_num().get_ui()))), inv);
  // entries sorted so the rounded sum does not depend on hash order
  Real s = 0;
  for (const auto& [p, v] : f.sorted_entries()) s += rational_pow(to_real(mpq_class(abs(v))), q.q);
  return rational_pow(s, inv);
}

namespace {

std::int64_t overlap(std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo, std::int64_t b_hi) {
  const std::int64_t lo = std::max(a_lo, b_lo), hi = std::min(a_hi, b_hi);
  return hi < lo ? 0 : hi - lo + 1;
}

}  // namespace

mpz_class incidence(const Curve& c, std::int64_t N, const LatticeSet& E, const LatticeSet& F) {
  c.require_valid();
  require_N(N);
  require_dim(c, set_dim(E));
  require_dim(c, set_dim(F));
  const auto gammas = c.samples(N);

  const auto* eb = std::get_if<BoxSet>(&E);
  const auto* fb = std::get_if<BoxSet>(&F);
  if (eb && fb) {
    mpz_class total = 0;
    for (const auto& g : gammas) {
      mpz_class prod = 1;
      for (std::size_t j = 0; j < c.dim() && prod != 0; ++j)
        prod *= static_cast<long>(overlap(fb->lo()[j], fb->hi()[j], checked::add(eb->lo()[j], g[j]),
                                          checked::add(eb->hi()[j], g[j])));
      total += prod;
    }
    return total;
  }

  const auto* es = std::get_if<SparseSet>(&E);
  const auto* fs = std::get_if<SparseSet>(&F);
  std::int64_t count = 0;
  if (fs && (!es || fs->size() <= es->size())) {
    for (const auto& x : *fs)
      for (const auto& g : gammas) count += set_contains(E, x - g);
  } else {
    for (const auto& y : *es)
      for (const auto& g : gammas) count += set_contains(F, y + g);
  }
  return mpz_class(static_cast<long>(count));
}

AlphaBeta alpha_beta(const LatticeSet& E, const LatticeSet& F, const Curve& c, std::int64_t N) {
  const mpz_class sE = set_size(E), sF = set_size(F);
  if (sE == 0 || sF == 0) throw HypothesisError("alpha/beta need nonempty E and F");
  AlphaBeta ab;
  ab.mass = incidence(c, N, E, F);
  ab.alpha = mpq_class(ab.mass, sF);
  ab.beta = mpq_class(ab.mass, sE);
  ab.alpha.canonicalize();
  ab.beta.canonicalize();
  return ab;
}

namespace {

// T^{-1} applied to a point, steps undone last to first.
LatticePoint apply_inverse(const AffineTransform& t, LatticePoint x) {
  const auto& steps = t.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (const auto* s = std::get_if<Shear>(&*it)) {
      x[s->target] = checked::add(x[s->target], checked::mul(checked::narrow(s->b), x[s->source]));
    } else if (const auto* tr = std::get_if<Translation>(&*it)) {
      for (std::size_t j = 0; j < x.dim(); ++j) x[j] = checked::sub(x[j], checked::narrow(tr->offset[j]));
    } else {
      const auto& d = std::get<Dilation>(*it);
      for (std::size_t j = 0; j < x.dim(); ++j) {
        if (abs(d.factors[j]) != 1) throw HypothesisError("pullback needs a unimodular transform");
        if (d.factors[j] < 0) x[j] = checked::sub(0, x[j]);
      }
    }
  }
  return x;
}

}  // namespace

SparseFunction pullback(const SparseFunction& f, const AffineTransform& t) {
  t.validate(f.dim());
  SparseFunction g(f.dim());
  for (const auto& [p, v] : f.values()) g.set(apply_inverse(t, p), v);
  return g;
}

std::vector<SparseFunction> dilation_slices(const SparseFunction& f, std::size_t coord, std::int64_t a) {
  if (a < 1) throw HypothesisError("dilation factor must be positive");
  if (coord >= f.dim()) throw HypothesisError("coordinate out of range");
  std::vector<SparseFunction> out(static_cast<std::size_t>(a), SparseFunction(f.dim()));
  for (const auto& [p, v] : f.values()) {
    std::int64_t r = p[coord] % a;
    if (r < 0) r += a;
    LatticePoint s = p;
    s[coord] = (p[coord] - r) / a;
    out[static_cast<std::size_t>(r)].set(s, v);
  }
  return out;
}

}  // namespace lpi
