#include "lpi/sparse.hpp"

#include <algorithm>

#include "lpi/errors.hpp"

namespace lpi {

SparseSet::SparseSet(std::size_t dim, std::vector<LatticePoint> points) : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.dim() != dim_)
      throw HypothesisError("point " + p.to_string() + " has dimension " + std::to_string(p.dim()) +
                            ", expected " + std::to_string(dim_));
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  rebuild_index();
}

void SparseSet::rebuild_index() {
  index_.clear();
  index_.reserve(points_.size());
  index_.insert(points_.begin(), points_.end());
}

bool SparseSet::is_subset_of(const SparseSet& other) const {
  return std::all_of(points_.begin(), points_.end(), [&](const LatticePoint& p) { return other.contains(p); });
}

SparseSet SparseSet::translated(const LatticePoint& v) const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + v);
  return SparseSet(dim_, std::move(out));
}

SparseSet SparseSet::negated() const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(-p);
  return SparseSet(dim_, std::move(out));
}

BoxSet::BoxSet(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size() || lo_.empty()) throw HypothesisError("box bounds must have equal, positive length");
  for (std::size_t j = 0; j < lo_.size(); ++j)
    if (lo_[j] > hi_[j]) throw HypothesisError("empty box side in coordinate " + std::to_string(j + 1));
}

BoxSet BoxSet::centered(const std::vector<std::int64_t>& half_sides) {
  std::vector<std::int64_t> lo, hi;
  for (auto h : half_sides) {
    if (h < 0) throw HypothesisError("negative half-side");
    lo.push_back(-h);
    hi.push_back(h);
  }
  return BoxSet(std::move(lo), std::move(hi));
}

mpz_class BoxSet::size() const {
  mpz_class s = 1;
  for (std::size_t j = 0; j < lo_.size(); ++j) s *= mpz_class(checked::widen(hi_[j])) - checked::widen(lo_[j]) + 1;
  return s;
}

bool BoxSet::contains(const LatticePoint& p) const {
  if (p.dim() != lo_.size()) throw HypothesisError("dimension mismatch against box");
  for (std::size_t j = 0; j < lo_.size(); ++j)
    if (p[j] < lo_[j] || p[j] > hi_[j]) return false;
  return true;
}

SparseSet BoxSet::materialize(std::uint64_t max_points) const {
  const mpz_class n = size();
  if (n > mpz_class(static_cast<unsigned long>(max_points)))
    throw BudgetExceeded("box with " + n.get_str() + " points exceeds budget " + std::to_string(max_points));
  std::vector<LatticePoint> pts;
  pts.reserve(n.get_ui());
  LatticePoint cur(dim());
  for (std::size_t j = 0; j < dim(); ++j) cur[j] = lo_[j];
  // odometer in lexicographic order, so the result is already sorted
  while (true) {
    pts.push_back(cur);
    std::size_t j = dim();
    while (j > 0) {
      --j;
      if (cur[j] < hi_[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo_[j];
      if (j == 0) return SparseSet(dim(), std::move(pts));
    }
  }
}

std::size_t set_dim(const LatticeSet& s) {
  return std::visit([](const auto& v) { return v.dim(); }, s);
}

mpz_class set_size(const LatticeSet& s) {
  if (const auto* sp = std::get_if<SparseSet>(&s)) return mpz_class(static_cast<unsigned long>(sp->size()));
  return std::get<BoxSet>(s).size();
}

bool set_contains(const LatticeSet& s, const LatticePoint& p) {
  return std::visit([&](const auto& v) { return v.contains(p); }, s);
}

SparseFunction SparseFunction::indicator(const SparseSet& s) {
  SparseFunction f(s.dim());
  f.values_.reserve(s.size());
  for (const auto& p : s) f.values_.emplace(p, mpq_class(1));
  return f;
}

void SparseFunction::check_dim(const LatticePoint& p) const {
  if (p.dim() != dim_)
    throw HypothesisError("dimension mismatch: function on Z^" + std::to_string(dim_) + ", point " + p.to_string());
}

mpq_class SparseFunction::value(const LatticePoint& p) const {
  check_dim(p);
  auto it = values_.find(p);
  return it == values_.end() ? mpq_class(0) : it->second;
}

void SparseFunction::add(const LatticePoint& p, const mpq_class& value) {
  check_dim(p);
  mpq_class v = value;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = values_.try_emplace(p, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) values_.erase(it);
  }
}

void SparseFunction::set(const LatticePoint& p, const mpq_class& value) {
  check_dim(p);
  mpq_class v = value;
  v.canonicalize();
  if (v == 0)
    values_.erase(p);
  else
    values_[p] = v;
}

std::vector<std::pair<LatticePoint, mpq_class>> SparseFunction::sorted_entries() const {
  std::vector<std::pair<LatticePoint, mpq_class>> out(values_.begin(), values_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

mpq_class SparseFunction::total() const {
  mpq_class s = 0;
  for (const auto& [p, v] : values_) s += v;
  return s;
}

SparseFunction SparseFunction::scaled(const mpq_class& factor) const {
  SparseFunction out(dim_);
  mpq_class c = factor;
  c.canonicalize();
  if (c == 0) return out;
  out.values_.reserve(values_.size());
  for (const auto& [p, v] : values_) out.values_.emplace(p, v * c);
  return out;
}

SparseFunction operator+(const SparseFunction& a, const SparseFunction& b) {
  if (a.dim_ != b.dim_) throw HypothesisError("dimension mismatch in function sum");
  SparseFunction out(a);
  for (const auto& [p, v] : b.values_) out.add(p, v);
  return out;
}

}  // namespace lpi
