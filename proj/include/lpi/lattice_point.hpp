#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "lpi/checked.hpp"

namespace lpi {

/// A point of Z^d. Coordinates are int64 and every arithmetic operation is
/// overflow-checked, so values are exact or the operation throws.
class LatticePoint {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 4>;

  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : c_(dim, 0) {}
  LatticePoint(std::initializer_list<std::int64_t> c) : c_(c) {}
  explicit LatticePoint(Storage c) : c_(std::move(c)) {}
  explicit LatticePoint(const std::vector<std::int64_t>& c) : c_(c.begin(), c.end()) {}

  std::size_t dim() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const Storage& coords() const noexcept { return c_; }

  bool is_zero() const noexcept {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], o.c_[i]);
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::sub(c_[i], o.c_[i]);
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  LatticePoint operator-() const {
    LatticePoint r(*this);
    for (auto& v : r.c_) v = checked::sub(0, v);
    return r;
  }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.c_ < b.c_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << p.to_string(); }

  void require_same_dim(const LatticePoint& o) const;

 private:
  Storage c_;
};

inline void LatticePoint::require_same_dim(const LatticePoint& o) const {
  if (o.dim() != dim())
    throw HypothesisError("dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
}

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    return boost::hash_range(p.coords().begin(), p.coords().end());
  }
};

}  // namespace lpi

template <>
struct std::hash<lpi::LatticePoint> : lpi::LatticePointHash {};
