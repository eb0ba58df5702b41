#include "lpi/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lpi/checked.hpp"
#include "lpi/divisors.hpp"
#include "lpi/errors.hpp"

namespace lpi {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& c, int power) {
  if (power < 0) throw InternalError("negative monomial power");
  std::vector<mpz_class> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw InternalError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& n) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::int64_t IntPoly::eval_i64(std::int64_t n) const {
  return checked::narrow(eval(checked::widen(n)));
}

IntPoly IntPoly::shifted(const mpz_class& h) const {
  // Horner in the ring: P(n+h) = (...((c_d)(n+h) + c_{d-1})(n+h) + ...).
  const IntPoly lin({h, mpz_class(1)});
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + IntPoly::constant(*it);
  return acc;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& c, const IntPoly& p) {
  std::vector<mpz_class> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += 'n';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

// --- parser -----------------------------------------------------------------
//
//   poly    := ws [sign] term { sign term } ws
//   term    := integer [ ['*'] 'n' ['^' integer] ]  |  'n' ['^' integer]

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    IntPoly acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        if (at_end()) break;
        if (peek() == '/' || peek() == '.') fail("non-integer coefficient");
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      acc += term(sign);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return acc;
  }

 private:
  IntPoly term(int sign) {
    if (at_end()) fail("expected a term");
    mpz_class coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      has_coeff = true;
      skip_ws();
      if (!at_end() && (peek() == '.' || peek() == '/'))
        fail("non-integer coefficient");
    }
    bool has_var = false;
    if (!at_end() && peek() == '*') {
      if (!has_coeff) fail("'*' without a coefficient");
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'n') fail("expected 'n' after '*'");
    }
    int power = 0;
    if (!at_end() && peek() == 'n') {
      ++pos_;
      has_var = true;
      power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected an exponent after '^'");
        const mpz_class e = integer();
        if (!e.fits_sint_p() || e > 4096) fail("exponent too large");
        power = static_cast<int>(e.get_si());
      }
    }
    if (!has_coeff && !has_var) {
      if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
        fail(std::string("unknown variable '") + peek() + "' (expected 'n')");
      fail("expected a coefficient or 'n'");
    }
    return IntPoly::monomial(sign * coeff, power);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// --- integer roots ------------------------------------------------------------

std::int64_t IntegerRoots::count_in(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) return 0;
  if (all_roots) return hi - lo + 1;
  return static_cast<std::int64_t>(
      std::count_if(roots.begin(), roots.end(), [&](std::int64_t r) { return r >= lo && r <= hi; }));
}

IntegerRoots integer_roots(const IntPoly& p, std::int64_t lo, std::int64_t hi) {
  IntegerRoots out;
  if (p.is_zero()) {
    out.all_roots = true;
    return out;
  }
  if (hi < lo) return out;
  // Strip the power of n dividing p: 0 is a root iff the constant term vanishes.
  int low = 0;
  while (p.coeffs()[static_cast<std::size_t>(low)] == 0) ++low;
  std::set<std::int64_t> found;
  if (low > 0 && lo <= 0 && 0 <= hi) found.insert(0);
  mpz_class c0 = p.coeffs()[static_cast<std::size_t>(low)];
  c0 /= p.content();
  // Any nonzero root r satisfies r | c0; roots larger than the interval are irrelevant.
  const mpz_class bound = std::max(abs(mpz_class(static_cast<long>(lo))), abs(mpz_class(static_cast<long>(hi))));
  const std::int64_t c0_i = checked::narrow(abs(c0));
  for (std::int64_t d : divisors(c0_i)) {
    if (d > bound) break;
    for (std::int64_t r : {d, -d}) {
      if (r < lo || r > hi) continue;
      if (p.eval(checked::widen(r)) == 0) found.insert(r);
    }
  }
  out.roots.assign(found.begin(), found.end());
  return out;
}

}  // namespace lpi
