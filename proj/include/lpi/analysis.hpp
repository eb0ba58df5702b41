#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lpi/count.hpp"
#include "lpi/curve.hpp"
#include "lpi/exponents.hpp"
#include "lpi/real.hpp"
#include "lpi/sparse.hpp"
#include "lpi/transform.hpp"

namespace lpi {

enum class ExtremizerKind { dirac, curve_image_dual, parabolic_box };
std::string to_string(ExtremizerKind k);
ExtremizerKind parse_extremizer_kind(const std::string& s);

struct ExtremizerSets {
  LatticeSet E, F;
};

/// dirac: E = {0}, F = gamma([1,N]).
/// curve_image_dual: E = -gamma([1,N]), F = {0}.
/// parabolic_box: E = F = box with half-sides floor(c_box N^{deg P_j}).
ExtremizerSets make_extremizer(ExtremizerKind kind, const Curve& c, std::int64_t N, const mpq_class& c_box = 1);

/// A family is a kind plus its box dilate; calling it generates the sets.
struct ExtremizerFamily {
  ExtremizerKind kind = ExtremizerKind::dirac;
  mpq_class c_box = 1;
  ExtremizerSets operator()(const Curve& c, std::int64_t N) const { return make_extremizer(kind, c, N, c_box); }
};

/// <A_N 1_E, 1_F> / (|E|^{1/p} |F|^{1/q'}) with the normalized operator,
/// kept in exact pieces.
struct RwtRatio {
  mpq_class pairing;  // <A_N 1_E, 1_F>
  mpz_class size_E, size_F;
  mpq_class inv_p, inv_q_dual;
  Real value;

  /// Exact test of ratio == N^a.
  bool equals_power_of(std::int64_t N, const mpq_class& a) const;
};
RwtRatio rwt_ratio_exact(const LatticeSet& E, const LatticeSet& F, const ExponentPair& e, const Curve& c,
                         std::int64_t N);
Real rwt_ratio(const LatticeSet& E, const LatticeSet& F, const ExponentPair& e, const Curve& c, std::int64_t N);

struct FitResult {
  std::vector<std::pair<double, double>> points;  // (log N, log value)
  double slope = 0;
  double intercept = 0;
  double max_residual = 0;
};
/// Ordinary least squares in log-log coordinates. Needs >= 3 distinct N and
/// positive values.
FitResult fit_exponent(const std::vector<std::pair<std::int64_t, Real>>& values);

/// J_{s,gamma}(N)^{1/(2s)} / N.
Real moment_norm(const Curve& c, int s, std::int64_t N, const CountOptions& opt = {});

struct RieszRow {
  mpq_class inv_p, inv_q;
  Region region;
  DominantTerm dominant;
};
struct RieszTable {
  std::vector<RieszRow> rows;  // grid first, the critical vertex last
  ExponentPair vertex{0, 0};
  std::string to_csv() const;
};
/// Grid (i/res, j/res), 0 <= i, j <= res, plus the vertex (1/p_c, 1/p_c').
RieszTable riesz_diagram_data(const Curve& c, int resolution);

/// Both sides of a norm identity as exact q-th powers.
struct NormIdentity {
  mpq_class lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
/// ||A^{T gamma} f||_q^q against ||A^gamma (f o T)||_q^q for a shear T.
NormIdentity shear_transport(const Curve& c, const Shear& s, std::int64_t N, const SparseFunction& f, unsigned q);
/// ||A^{T gamma} f||_q^q against sum_r ||A^gamma g_r||_q^q, T dilating
/// coordinate `coord` by a and g_r(.., s, ..) = f(.., a s + r, ..).
NormIdentity dilation_decomposition(const Curve& c, std::size_t coord, std::int64_t a, std::int64_t N,
                                    const SparseFunction& f, unsigned q);

enum class TheoremCase { i, ii, iii };
TheoremCase parse_theorem_case(const std::string& s);
std::string to_string(TheoremCase t);

struct ScanReport {
  TheoremCase which = TheoremCase::i;
  std::string curve;
  mpq_class theta;            // exponent on |E| and |F|
  mpq_class reference_slope;  // -theta
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::int64_t> Ns;
  std::vector<Real> max_ratio;         // per N
  std::vector<std::string> max_source; // family attaining the max
  FitResult fit;
  std::string to_text() const;
};

/// For each N the max over witnesses and `trials` random subsets of the box
/// [0,N)^d of <A_N 1_E, 1_F> / (|E|^theta |F|^theta), then a log-log fit.
ScanReport theorem_consistency_scan(TheoremCase which, const Curve& c, const std::vector<std::int64_t>& Ns,
                                    int trials, std::uint64_t seed, int threads = 0);

}  // namespace lpi
