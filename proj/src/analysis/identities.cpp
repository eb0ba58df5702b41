#include "lpi/analysis.hpp"
#include "lpi/errors.hpp"
#include "lpi/operators.hpp"

namespace lpi {

NormIdentity shear_transport(const Curve& c, const Shear& s, std::int64_t N, const SparseFunction& f, unsigned q) {
  const AffineTransform T({s});
  const Curve tc = apply_transform(c, T);
  NormIdentity r;
  r.lhs = lq_norm_pow(average(tc, N, f), q);
  r.rhs = lq_norm_pow(average(c, N, pullback(f, T)), q);
  return r;
}

NormIdentity dilation_decomposition(const Curve& c, std::size_t coord, std::int64_t a, std::int64_t N,
                                    const SparseFunction& f, unsigned q) {
  if (a < 1) throw HypothesisError("dilation factor must be positive");
  if (coord >= c.dim()) throw HypothesisError("coordinate out of range");
  std::vector<mpz_class> factors(c.dim(), 1);
  factors[coord] = static_cast<long>(a);
  const Curve tc = apply_transform(c, AffineTransform({Dilation{factors}}));
  NormIdentity r;
  r.lhs = lq_norm_pow(average(tc, N, f), q);
  r.rhs = 0;
  for (const auto& g : dilation_slices(f, coord, a)) r.rhs += lq_norm_pow(average(c, N, g), q);
  return r;
}

}  // namespace lpi
