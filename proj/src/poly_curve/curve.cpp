#include "lpi/curve.hpp"

#include <algorithm>
#include <set>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

int sum_degrees(const std::vector<IntPoly>& comps) {
  int d = 0;
  for (const auto& p : comps) d += std::max(p.degree(), 0);
  return d;
}

}  // namespace

Curve::Curve(std::vector<IntPoly> components, UncheckedTag)
    : components_(std::move(components)), total_degree_(sum_degrees(components_)) {}

Curve::Curve(std::vector<IntPoly> components) : Curve(std::move(components), UncheckedTag{}) {
  require_valid();
}

Curve Curve::unchecked(std::vector<IntPoly> components) {
  return Curve(std::move(components), UncheckedTag{});
}

Curve Curve::moment(int d) {
  if (d < 1) throw HypothesisError("moment curve dimension must be >= 1");
  std::vector<IntPoly> comps;
  for (int j = 1; j <= d; ++j) comps.push_back(IntPoly::monomial(1, j));
  return Curve(std::move(comps));
}

bool Curve::has_constant_component() const noexcept {
  return std::any_of(components_.begin(), components_.end(),
                     [](const IntPoly& p) { return p.is_constant(); });
}

bool Curve::is_separated() const noexcept {
  for (std::size_t j = 1; j < components_.size(); ++j)
    if (components_[j - 1].degree() >= components_[j].degree()) return false;
  return true;
}

void Curve::require_valid() const {
  if (components_.empty()) throw HypothesisError("curve has no components");
  if (has_constant_component()) throw HypothesisError("curve has a constant component: " + to_string());
  if (!is_separated()) throw HypothesisError("curve degrees are not separated: " + to_string());
}

LatticePoint Curve::at(std::int64_t n) const {
  LatticePoint p(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) p[j] = components_[j].eval_i64(n);
  return p;
}

std::vector<mpz_class> Curve::at_exact(const mpz_class& n) const {
  std::vector<mpz_class> out;
  out.reserve(components_.size());
  for (const auto& p : components_) out.push_back(p.eval(n));
  return out;
}

std::vector<LatticePoint> Curve::samples(std::int64_t N) const {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(N, 0)));
  for (std::int64_t n = 1; n <= N; ++n) out.push_back(at(n));
  return out;
}

bool Curve::injective_on(std::int64_t N) const {
  std::set<LatticePoint> seen;
  for (std::int64_t n = 1; n <= N; ++n)
    if (!seen.insert(at(n)).second) return false;
  return true;
}

int Curve::fibre_bound() const noexcept {
  int b = 0;
  for (const auto& p : components_)
    if (p.degree() > 0 && (b == 0 || p.degree() < b)) b = p.degree();
  return b;
}

std::string Curve::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j) s += ',';
    s += components_[j].to_string();
  }
  return s;
}

Curve parse_curve_unchecked(std::string_view text) {
  std::vector<IntPoly> comps;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      comps.push_back(parse_poly(part));
    } catch (const ParseError& e) {
      throw ParseError(std::string("component ") + std::to_string(comps.size() + 1) + ": " + e.what(),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Curve::unchecked(std::move(comps));
}

Curve parse_curve(std::string_view text) {
  Curve c = parse_curve_unchecked(text);
  c.require_valid();
  return c;
}

Curve project(const Curve& c, const std::vector<std::size_t>& coords) {
  if (coords.empty()) throw HypothesisError("projection onto an empty coordinate set");
  std::vector<std::size_t> sel(coords);
  std::sort(sel.begin(), sel.end());
  if (std::adjacent_find(sel.begin(), sel.end()) != sel.end())
    throw HypothesisError("projection coordinates must be distinct");
  std::vector<IntPoly> comps;
  for (std::size_t j : sel) {
    if (j >= c.dim()) throw HypothesisError("projection coordinate out of range");
    comps.push_back(c.component(j));
  }
  return Curve::unchecked(std::move(comps));
}

}  // namespace lpi
