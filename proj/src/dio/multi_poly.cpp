#include "lpi/multi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "lpi/checked.hpp"
#include "lpi/errors.hpp"

namespace lpi {

namespace {

constexpr const char* kNames[MultiPoly::kVars] = {"X", "Y", "Z"};

mpz_class pow_mpz(const mpz_class& b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

void MultiPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const mpz_class& c) {
  MultiPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int v) {
  if (v < 0 || v >= kVars) throw InternalError("variable index out of range");
  Exponent e{0, 0, 0};
  e[v] = 1;
  MultiPoly p;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::compose(const IntPoly& p, const MultiPoly& arg) {
  // Horner in the argument
  MultiPoly r;
  for (int i = p.degree(); i >= 0; --i) r = r * arg + constant(p.coeff(i));
  return r;
}

int MultiPoly::degree_in(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

MultiPoly operator*(const mpz_class& c, const MultiPoly& p) {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
  return r;
}

mpz_class MultiPoly::eval(const std::array<mpz_class, kVars>& at) const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (int v = 0; v < kVars; ++v)
      if (e[v]) t *= pow_mpz(at[v], e[v]);
    s += t;
  }
  return s;
}

IntPoly MultiPoly::substitute(const std::array<IntPoly, kVars>& args) const {
  std::array<std::vector<IntPoly>, kVars> powers;
  for (int v = 0; v < kVars; ++v) {
    powers[v].push_back(IntPoly::constant(1));
    for (int i = 1; i <= std::max(0, degree_in(v)); ++i) powers[v].push_back(powers[v].back() * args[v]);
  }
  IntPoly r;
  for (const auto& [e, c] : terms_) r += c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
  return r;
}

MultiPoly MultiPoly::divide_by_difference(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= kVars || b >= kVars) throw InternalError("bad division variables");
  if (is_zero()) return {};
  // Write the dividend as sum_k C_k X_a^k with C_k free of X_a, then run
  // synthetic division with root X_b.
  const int n = degree_in(a);
  std::vector<MultiPoly> C(static_cast<std::size_t>(n) + 1);
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[a] = 0;
    C[e[a]].add_term(rest, c);
  }
  const MultiPoly xb = variable(b);
  std::vector<MultiPoly> q(static_cast<std::size_t>(std::max(n, 1)));
  if (n == 0) throw InternalError("division by (X-Y) of a polynomial free of the variable");
  q[n - 1] = C[n];
  for (int k = n - 1; k >= 1; --k) q[k - 1] = C[k] + xb * q[k];
  const MultiPoly rem = C[0] + xb * q[0];
  if (!rem.is_zero()) throw InternalError("difference quotient left remainder " + rem.to_string());
  MultiPoly out;
  for (int k = 0; k < n; ++k)
    for (const auto& [e, c] : q[k].terms_) {
      Exponent f = e;
      f[a] += k;
      out.add_term(f, c);
    }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first, then lexicographically larger exponents
  std::vector<std::pair<Exponent, mpz_class>> t(terms_.begin(), terms_.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& l, const auto& r) {
    const int dl = l.first[0] + l.first[1] + l.first[2], dr = r.first[0] + r.first[1] + r.first[2];
    if (dl != dr) return dl > dr;
    return l.first > r.first;
  });
  for (const auto& [e, c] : t) {
    mpz_class mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    const bool monic = (e[0] + e[1] + e[2]) > 0 && mag == 1;
    if (!monic) os << mag;
    bool need_star = !monic;
    for (int v = 0; v < kVars; ++v) {
      if (!e[v]) continue;
      if (need_star) os << '*';
      os << kNames[v];
      if (e[v] > 1) os << '^' << e[v];
      need_star = true;
    }
  }
  return os.str();
}

CompiledPoly::CompiledPoly(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) terms_.push_back({checked::narrow(c), e});
}

std::int64_t CompiledPoly::eval(std::int64_t x, std::int64_t y, std::int64_t z) const {
  const std::int64_t at[3] = {x, y, z};
  std::int64_t s = 0;
  for (const auto& t : terms_) {
    std::int64_t v = t.coeff;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < t.exp[k]; ++i) v = checked::mul(v, at[k]);
    s = checked::add(s, v);
  }
  return s;
}

DifferenceQuotient difference_quotient(const IntPoly& p) {
  if (p.degree() < 2) throw HypothesisError("difference quotient needs deg P >= 2, got " + p.to_string());
  const MultiPoly X = MultiPoly::variable(0), Y = MultiPoly::variable(1), Z = MultiPoly::variable(2);
  const MultiPoly PX = MultiPoly::compose(p, X), PY = MultiPoly::compose(p, Y), PZ = MultiPoly::compose(p, Z);

  DifferenceQuotient dq;
  dq.source = p;
  dq.q2 = (PX - PY).divide_by_difference(0, 1);
  const MultiPoly lhs3 = PX - PY + PZ - MultiPoly::compose(p, X - Y + Z);
  dq.q3 = lhs3.divide_by_difference(0, 1).divide_by_difference(1, 2);

  // (deg+2) points per axis exceed the degree in every variable, so agreement
  // on the grid certifies both identities.
  const long side = p.degree() + 2;
  const long lo = -side / 2;
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j)
      for (long k = 0; k < side; ++k) {
        const mpz_class x = lo + i, y = lo + j, z = lo + k;
        const mpz_class y2 = lo + j * side + k;  // q2 gets its own (deg+2)^3 points
        if (p.eval(x) - p.eval(y2) != dq.q2.eval({x, y2, 0}) * (x - y2))
          throw InternalError("q2 identity fails at (" + x.get_str() + "," + y2.get_str() + ")");
        const mpz_class l = p.eval(x) - p.eval(y) + p.eval(z) - p.eval(x - y + z);
        if (l != dq.q3.eval({x, y, z}) * (x - y) * (y - z))
          throw InternalError("q3 identity fails at (" + x.get_str() + "," + y.get_str() + "," + z.get_str() + ")");
        dq.certified_points += 2;
      }

  // Q2(n, Y) must be non-constant in Y for every fixed n; sample the grid.
  const IntPoly ny = IntPoly::monomial(1, 1);
  for (long n = lo; n < lo + side; ++n) {
    if (dq.q2.substitute({IntPoly::constant(n), ny, IntPoly()}).is_constant())
      throw InternalError("Q2(n,Y) is constant at n=" + std::to_string(n));
  }
  return dq;
}

IntPoly q2_along_shift(const DifferenceQuotient& dq, const mpz_class& h) {
  const IntPoly n = IntPoly::monomial(1, 1);
  return dq.q2.substitute({n, n - IntPoly::constant(h), IntPoly()});
}

}  // namespace lpi
