#pragma once

// Shared helpers for the counting kernels.

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#include <omp.h>

#include "lpi/count.hpp"
#include "lpi/curve.hpp"
#include "lpi/errors.hpp"

namespace lpi::detail {

/// gamma(1..N) as a flat row-major int64 table. The constructor bounds every
/// coordinate so that sums of up to `terms` entries and their differences stay
/// below 2^62; inner loops may then use plain arithmetic.
struct GammaTable {
  GammaTable(const Curve& c, std::int64_t N, int terms);

  std::size_t d;
  std::int64_t N;
  std::vector<std::int64_t> v;  // v[(n-1)*d + j]

  const std::int64_t* row(std::int64_t n) const { return v.data() + static_cast<std::size_t>(n - 1) * d; }
};

/// Captures the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(m_);
      if (!e_) e_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (e_) std::rethrow_exception(e_);
  }

 private:
  std::mutex m_;
  std::exception_ptr e_;
};

inline int thread_count(const CountOptions& opt) {
  if (opt.exec == Exec::serial) return 1;
  return opt.threads > 0 ? opt.threads : omp_get_max_threads();
}

/// N^e, or UINT64_MAX when it does not fit.
std::uint64_t saturating_pow(std::int64_t N, int e);

void require_budget(std::uint64_t work, const CountOptions& opt, const char* what);

}  // namespace lpi::detail
