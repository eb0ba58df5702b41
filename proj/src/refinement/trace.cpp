#include <sstream>

#include <json.hpp>

#include "lpi/errors.hpp"
#include "lpi/operators.hpp"
#include "lpi/refinement.hpp"

namespace lpi {

namespace {

using ordered_json = nlohmann::ordered_json;

mpq_class qpow(const mpq_class& b, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool theorem_case(const Curve& c, int k) {
  const IntPoly n = IntPoly::monomial(1, 1);
  switch (k) {
    case 1: return c.dim() == 1 && c.component(0).degree() >= 2;
    case 2: return c.dim() == 2 && c.component(0) == n && c.component(1).degree() >= 2;
    case 3: return c == Curve::moment(3);
    default: return false;
  }
}

PropertyCheck named(const std::string& n) {
  PropertyCheck c;
  c.name = n;
  return c;
}

void fail(PropertyCheck& c, const std::string& why) {
  if (c.ok) c.detail = why;
  c.ok = false;
}

// Evenly spaced in sorted order, at most `cap` points.
std::vector<LatticePoint> sample_ys(const SparseSet& Ek, std::size_t cap) {
  const auto& pts = Ek.points();
  if (cap == 0 || pts.size() <= cap) return pts;
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(pts[i * pts.size() / cap]);
  return out;
}

}  // namespace

SubcriticalReport verify_subcritical_instance(const SparseSet& E, const SparseSet& F, const Curve& c, std::int64_t N,
                                              int k, const SubcriticalOptions& opt) {
  c.require_valid();
  if (k < 1) throw HypothesisError("k must be >= 1");
  if (N < 1) throw HypothesisError("N must be >= 1");
  if (E.empty() || F.empty()) throw HypothesisError("E and F must be nonempty");
  if (E.dim() != c.dim() || F.dim() != c.dim()) throw HypothesisError("set dimension does not match the curve");

  SubcriticalReport rep;
  rep.curve = c.to_string();
  rep.N = N;
  rep.k = k;
  rep.size_E = E.size();
  rep.size_F = F.size();
  const AlphaBeta ab = alpha_beta(LatticeSet(E), LatticeSet(F), c, N);
  rep.mass = ab.mass;
  rep.alpha = ab.alpha;
  rep.beta = ab.beta;
  rep.matches_theorem_case = theorem_case(c, k);
  rep.fibre_bound = c.fibre_bound();
  const mpq_class r = rep.fibre_bound;

  if (ab.mass == 0 || rep.alpha <= 2 * r) {
    rep.trivial_regime = true;
    rep.trivial_reason = ab.mass == 0 ? "alpha = 0" : "alpha <= 2 * fibre bound";
    // alpha <= 2r and beta <= N
    PropertyCheck t = named("trivial bound alpha^k beta^k <= (2r)^k N^k");
    t.instances = 1;
    if (qpow(rep.alpha, k) * qpow(rep.beta, k) > qpow(2 * r, k) * qpow(mpq_class(N), k)) fail(t, "bound violated");
    rep.checks.push_back(t);
    return rep;
  }

  const Refinement ref = refine(E, F, c, N, k);
  for (int j = 0; j <= k; ++j) {
    rep.sizes_E.push_back(ref.E[static_cast<std::size_t>(j)].size());
    rep.sizes_F.push_back(ref.F[static_cast<std::size_t>(j)].size());
  }
  for (int j = 1; j <= k; ++j) {
    rep.alpha_j.push_back(ref.alpha[static_cast<std::size_t>(j)]);
    rep.beta_j.push_back(ref.beta[static_cast<std::size_t>(j)]);
  }
  rep.checks = check_refinement(ref);

  mpq_class C = rep.alpha / (rep.alpha - 2 * r);
  for (int j = 1; j <= k; ++j) C *= qpow(2, 4 * j - 1);
  rep.constant = C;

  // Per-level thresholds: level i uses beta_{k-i+1}/2 and alpha_{k-i+1}/2,
  // the last A slice alpha_1/2 - r.
  std::vector<mpq_class> tb(static_cast<std::size_t>(k + 1)), ta(static_cast<std::size_t>(k + 1));
  mpq_class prod = 1;
  for (int i = 1; i <= k; ++i) {
    const auto lv = static_cast<std::size_t>(k - i + 1);
    tb[static_cast<std::size_t>(i)] = ref.beta[lv] / 2;
    ta[static_cast<std::size_t>(i)] = i == k ? mpq_class(ref.alpha[1] / 2 - r) : mpq_class(ref.alpha[lv] / 2);
    prod *= tb[static_cast<std::size_t>(i)] * ta[static_cast<std::size_t>(i)];
  }

  PropertyCheck slices = named("slice sizes exceed per-level thresholds"),
                lower = named("|T| > product of slice thresholds"),
                prune = named("pruning invariant: y not in Psi(T)"), inside = named("Psi(T) subset E"),
                upper = named("|T| <= m |Psi(T)| <= m |E|"),
                final_ = named("alpha^k beta^k <= C m |E|");
  const mpq_class lhs = qpow(rep.alpha, k) * qpow(rep.beta, k);
  const mpz_class sizeE = static_cast<unsigned long>(E.size());

  for (const auto& y : sample_ys(ref.E.back(), opt.y_cap)) {
    const Tower t = build_tower(y, ref, opt.tower_budget, opt.threads);
    YResult yr;
    yr.y = y;
    yr.tower_size = t.size;
    yr.image_count = static_cast<std::int64_t>(t.images.size());
    yr.min_b = t.min_b;
    yr.min_a = t.min_a;
    yr.max_removed = t.max_removed;
    yr.budget_hit = t.budget_hit;
    const std::string at = " at y = " + y.to_string();
    if (t.budget_hit) {
      rep.budget_hit = true;
      rep.ys.push_back(yr);
      continue;
    }
    yr.mult = multiplicity(t.images);

    for (int i = 1; i <= k; ++i) {
      ++slices.instances;
      const auto ii = static_cast<std::size_t>(i);
      if (!(t.min_b[ii] > tb[ii]) || !(t.min_a[ii] > ta[ii])) fail(slices, "level " + std::to_string(i) + at);
    }
    ++lower.instances;
    if (!(mpq_class(t.size) > prod)) fail(lower, "|T| = " + std::to_string(t.size) + at);
    ++prune.instances;
    if (t.images.count(y)) fail(prune, "chain returns to y" + at);
    ++inside.instances;
    for (const auto& [p, cnt] : t.images)
      if (!E.contains(p)) {
        fail(inside, p.to_string() + " not in E" + at);
        break;
      }
    ++upper.instances;
    const mpz_class mT = mpz_class(static_cast<long>(yr.mult.m)) * yr.image_count;
    if (mpz_class(static_cast<long>(t.size)) > mT || mT > yr.mult.m * sizeE) fail(upper, "bound violated" + at);
    ++final_.instances;
    if (lhs > C * yr.mult.m * sizeE) fail(final_, "bound violated" + at);
    rep.ys.push_back(std::move(yr));
  }
  for (auto* p : {&slices, &lower, &prune, &inside, &upper, &final_}) rep.checks.push_back(*p);
  return rep;
}

bool SubcriticalReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const YResult* SubcriticalReport::chosen() const {
  const YResult* best = nullptr;
  for (const auto& y : ys)
    if (!y.budget_hit && (!best || y.mult.m > best->mult.m)) best = &y;
  return best;
}

std::string SubcriticalReport::to_json() const {
  ordered_json j;
  j["curve"] = curve;
  j["N"] = N;
  j["k"] = k;
  j["size_E"] = size_E;
  j["size_F"] = size_F;
  j["mass"] = mass.get_str();
  j["alpha"] = alpha.get_str();
  j["beta"] = beta.get_str();
  j["matches_theorem_case"] = matches_theorem_case;
  j["trivial_regime"] = trivial_regime;
  if (trivial_regime) j["trivial_reason"] = trivial_reason;
  j["fibre_bound"] = fibre_bound;
  j["sizes_E"] = sizes_E;
  j["sizes_F"] = sizes_F;
  auto strs = [](const std::vector<mpq_class>& v) {
    std::vector<std::string> s;
    for (const auto& q : v) s.push_back(q.get_str());
    return s;
  };
  j["alpha_j"] = strs(alpha_j);
  j["beta_j"] = strs(beta_j);
  j["constant"] = constant.get_str();
  ordered_json ya = ordered_json::array();
  for (const auto& y : ys) {
    ordered_json o;
    o["y"] = y.y.coords();
    o["tower_size"] = y.tower_size;
    o["images"] = y.image_count;
    o["m"] = y.mult.m;
    if (y.mult.m > 0) o["witness"] = y.mult.witness.coords();
    o["min_b"] = std::vector<std::int64_t>(y.min_b.begin() + (y.min_b.empty() ? 0 : 1), y.min_b.end());
    o["min_a"] = std::vector<std::int64_t>(y.min_a.begin() + (y.min_a.empty() ? 0 : 1), y.min_a.end());
    o["max_removed"] = y.max_removed;
    o["budget_hit"] = y.budget_hit;
    ya.push_back(std::move(o));
  }
  j["ys"] = std::move(ya);
  ordered_json ca = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json o;
    o["name"] = c.name;
    o["ok"] = c.ok;
    o["instances"] = c.instances;
    if (!c.ok) o["detail"] = c.detail;
    ca.push_back(std::move(o));
  }
  j["checks"] = std::move(ca);
  j["budget_hit"] = budget_hit;
  j["ok"] = ok();
  return j.dump();
}

std::string SubcriticalReport::to_text() const {
  std::ostringstream os;
  os << "curve " << curve << "  N=" << N << "  k=" << k << "\n";
  os << "|E|=" << size_E << " |F|=" << size_F << " mass=" << mass << " alpha=" << alpha << " beta=" << beta << "\n";
  if (!matches_theorem_case) os << "note: (curve, k) is outside the subcritical cases covered by the bound\n";
  if (trivial_regime) {
    os << "trivial regime: " << trivial_reason << "\n";
  } else {
    for (int j = 0; j <= k; ++j)
      os << "  level " << j << ": |E_j|=" << sizes_E[static_cast<std::size_t>(j)]
         << " |F_j|=" << sizes_F[static_cast<std::size_t>(j)];
    os << "\n";
    os << "C=" << constant << "  sampled y: " << ys.size() << "\n";
    if (const YResult* y = chosen())
      os << "chosen y=" << y->y.to_string() << " |T|=" << y->tower_size << " |Psi(T)|=" << y->image_count
         << " m=" << y->mult.m << " at " << y->mult.witness.to_string() << "\n";
  }
  for (const auto& c : checks) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name << " (" << c.instances << ")";
    if (!c.ok) os << ": " << c.detail;
    os << "\n";
  }
  if (budget_hit) os << "tower budget hit; some y skipped\n";
  return os.str();
}

}  // namespace lpi
