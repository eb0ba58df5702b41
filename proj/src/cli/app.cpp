#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "lpi/analysis.hpp"
#include "lpi/cli.hpp"
#include "lpi/errors.hpp"
#include "lpi/set_io.hpp"

namespace lpi::cli {

void RunConfig::validate() const {
  if (budget_tuples == 0) throw HypothesisError("--budget-tuples must be positive");
  if (tower_budget == 0) throw HypothesisError("--tower-budget must be positive");
  if (threads < 0) throw HypothesisError("--threads must be >= 0");
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 1) throw HypothesisError("N values must be >= 1");
    if (i && Ns[i] <= Ns[i - 1]) throw HypothesisError("N values must be distinct and sorted");
  }
}

std::map<std::string, std::string> read_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config " + path, 0);
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in " + path, lineno);
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r"), r = s.find_last_not_of(" \t\r");
      return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("empty key in " + path, lineno);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string c_box = "1", config;
  CLI::App app{"Exact counting and verification tools for discrete curve averages", "lpi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--curve", cfg.curve_text, "curve components, e.g. n,n^2");
  app.add_option("--N", cfg.Ns, "N values, comma separated")->delimiter(',');
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--budget-tuples", cfg.budget_tuples, "enumeration cap");
  app.add_option("--cache", cfg.cache, "JSON-lines count cache");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--c-box", c_box, "box dilate c_box (rational)");
  app.add_option("--threads", cfg.threads, "OpenMP threads (0: default)");
  app.add_option("--config", config, "flat key=value file; flags win");
  app.add_flag("--no-timing", cfg.no_timing, "write elapsed = 0");
  app.add_option("--inject-fault", cfg.inject_fault, "verify only: break one computation");

  auto* count = app.add_subcommand("count", "exact solution counts as JSON lines");
  count->add_option("--s,--k", cfg.s_or_k, "s (homogeneous) or k (inhomogeneous)");
  count->add_option("--z", cfg.z, "target, comma separated (use --z=-1,2 for negatives)")->delimiter(',');
  count->add_option("--method", cfg.method, "brute, mitm, lemma1, lemma2, lemma3");

  auto* verify = app.add_subcommand("verify", "run the oracle and invariant suites");
  auto* suite_opt = verify->add_option("--suite", cfg.suites, "suites, comma separated")->delimiter(',');

  auto* exponent = app.add_subcommand("exponent", "fit a scaling exponent over N");
  exponent->add_option("--family", cfg.family, "dirac, dual, box, J, moment, scan");
  exponent->add_option("--p", cfg.p, "p for ratio families");
  exponent->add_option("--q", cfg.q, "q for ratio families");
  exponent->add_option("--s", cfg.s_or_k, "s for J and moment");
  exponent->add_option("--case", cfg.theorem_case, "scan case: i, ii, iii");
  exponent->add_option("--trials", cfg.trials, "random instances per N for scan");

  auto* refine = app.add_subcommand("refine", "refinement, tower and multiplicity report");
  refine->add_option("--E", cfg.set_E, "set file for E")->required();
  refine->add_option("--F", cfg.set_F, "set file for F")->required();
  refine->add_option("--k", cfg.s_or_k, "k in {1,2,3}");
  refine->add_option("--y-cap", cfg.y_cap, "y values sampled from E_k");
  refine->add_option("--tower-budget", cfg.tower_budget, "max chains per tower");

  auto* riesz = app.add_subcommand("riesz", "Riesz diagram data as CSV");
  riesz->add_option("--resolution", cfg.resolution, "grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    if (e.get_exit_code() != 0) throw;
    std::ostringstream o, ignored;
    app.exit(e, o, ignored);
    throw HelpRequested{o.str()};
  }

  CLI::App* sub = nullptr;
  for (auto* s : {count, verify, exponent, refine, riesz})
    if (s->parsed()) sub = s;
  if (!config.empty()) {
    for (const auto& [key, value] : read_flat_config(config)) {
      CLI::Option* opt = sub->get_option_no_throw("--" + key);
      if (!opt) opt = app.get_option_no_throw("--" + key);
      if (!opt) throw ParseError("unknown config key '" + key + "'", 0);
      if (opt->count() > 0) continue;
      opt->add_result(value);
      opt->run_callback();
    }
  }
  cfg.c_box = parse_rational(c_box);
  cfg.suites_given = suite_opt->count() > 0;
  cfg.curve_given = app.get_option("--curve")->count() > 0;
  if (count->parsed()) cfg.command = Command::count;
  if (verify->parsed()) cfg.command = Command::verify;
  if (exponent->parsed()) cfg.command = Command::exponent;
  if (refine->parsed()) cfg.command = Command::refine;
  if (riesz->parsed()) cfg.command = Command::riesz;
  cfg.validate();
  return cfg;
}

namespace {

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path, 0);
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Curve require_curve(const RunConfig& cfg) {
  if (cfg.curve_text.empty()) throw HypothesisError("--curve is required");
  return parse_curve(cfg.curve_text);
}

void require_Ns(const RunConfig& cfg) {
  if (cfg.Ns.empty()) throw HypothesisError("--N is required");
}

CountOptions count_options(const RunConfig& cfg) {
  CountOptions o;
  o.budget_tuples = cfg.budget_tuples;
  o.threads = cfg.threads;
  return o;
}

// Polynomial P for the lemma counters: a single component, or the second
// component of (n, P).
IntPoly lemma_poly(const Curve& c, CountMethod m) {
  if (c.dim() == 1) return c.component(0);
  if (m == CountMethod::lemma2 && c.dim() == 2 && c.component(0) == IntPoly::monomial(1, 1)) return c.component(1);
  throw HypothesisError("lemma methods need a curve P or (n, P)");
}

CountRecord compute(const RunConfig& cfg, const Curve* c, CountMethod m, std::int64_t N) {
  const CountOptions opt = count_options(cfg);
  auto zi = [&](std::size_t need) {
    if (cfg.z.size() != need)
      throw HypothesisError("target needs " + std::to_string(need) + " components, got " + std::to_string(cfg.z.size()));
  };
  switch (m) {
    case CountMethod::lemma1:
      zi(1);
      return count_lemma1(lemma_poly(*c, m), cfg.z[0], N, opt);
    case CountMethod::lemma2:
      zi(2);
      return count_lemma2(lemma_poly(*c, m), cfg.z[0], cfg.z[1], N, opt);
    case CountMethod::lemma3:
      zi(3);
      return count_lemma3(cfg.z[0], cfg.z[1], cfg.z[2], N, opt);
    default:
      if (cfg.z.empty()) return count_homogeneous(*c, cfg.s_or_k, N, m, opt);
      zi(c->dim());
      return count_inhomogeneous(*c, cfg.s_or_k, N, LatticePoint(cfg.z), m, opt);
  }
}

// The key count_* will produce, so the cache can be consulted first.
std::string predicted_key(const RunConfig& cfg, const Curve* c, CountMethod m, std::int64_t N) {
  CountRecord r;
  r.N = N;
  r.method = m;
  r.z = cfg.z;
  r.mode = cfg.z.empty() ? CountMode::homogeneous : CountMode::inhomogeneous;
  r.s_or_k = cfg.s_or_k;
  switch (m) {
    case CountMethod::lemma1: r.curve = lemma_poly(*c, m).to_string(); r.s_or_k = 1; break;
    case CountMethod::lemma2: r.curve = "n," + lemma_poly(*c, m).to_string(); r.s_or_k = 2; break;
    case CountMethod::lemma3: r.curve = "n,n^2,n^3"; r.s_or_k = 3; break;
    default: r.curve = c->to_string();
  }
  return r.cache_key();
}

std::string real_str(const Real& v) { return v.str(17, std::ios_base::scientific); }

}  // namespace

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_Ns(cfg);
  const CountMethod m = parse_count_method(cfg.method);
  std::optional<Curve> curve;
  if (m == CountMethod::lemma3) {
    curve = cfg.curve_given ? parse_curve(cfg.curve_text) : Curve::moment(3);
    if (!(*curve == Curve::moment(3))) throw HypothesisError("lemma3 counts the curve n,n^2,n^3");
  } else {
    curve = require_curve(cfg);
  }
  std::optional<CountCache> cache;
  if (!cfg.cache.empty()) cache.emplace(cfg.cache);
  Sink sink(cfg.out, out);
  for (auto N : cfg.Ns) {
    const std::string key = predicted_key(cfg, &*curve, m, N);
    if (cache) {
      if (auto hit = cache->find(key)) {
        if (CountCache::audit_selected(key, cfg.seed)) {
          const CountRecord fresh = compute(cfg, &*curve, m, N);
          if (fresh.count != hit->count)
            throw InternalError("cache audit mismatch for " + key + ": cached " + hit->count.get_str() + ", computed " +
                                fresh.count.get_str());
          err << "audited cache entry " << key << "\n";
        }
        hit->cached = true;
        hit->elapsed = 0;
        *sink << hit->to_json_line() << '\n';
        continue;
      }
    }
    CountRecord rec = compute(cfg, &*curve, m, N);
    if (cfg.no_timing) rec.elapsed = 0;
    if (cache) cache->store(rec);
    *sink << rec.to_json_line() << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<std::string> suites = cfg.suites_given ? cfg.suites : suite_names();
  suites.erase(std::remove(suites.begin(), suites.end(), std::string()), suites.end());
  if (suites.empty()) throw HypothesisError("empty suite selection");
  const auto& known = suite_names();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw HypothesisError("unknown suite '" + s + "'");
  if (!cfg.inject_fault.empty()) {
    const auto& faults = fault_names();
    if (std::find(faults.begin(), faults.end(), cfg.inject_fault) == faults.end())
      throw HypothesisError("unknown fault '" + cfg.inject_fault + "'");
  }
  Sink sink(cfg.out, out);
  bool all = true;
  for (const auto& s : suites) {
    const SuiteResult r = run_suite(s, cfg.seed, cfg.inject_fault, cfg.threads);
    for (const auto& c : r.checks) {
      *sink << (c.ok ? "PASS " : "FAIL ") << s << ": " << c.name << " (" << c.instances << " instances)";
      if (!c.ok) *sink << " -- " << c.detail;
      *sink << '\n';
    }
    all = all && r.ok();
  }
  *sink << (all ? "all suites passed" : "some suites failed") << '\n';
  return all ? 0 : 1;
}

int cmd_exponent(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_Ns(cfg);
  const Curve c = require_curve(cfg);
  const int D = c.total_degree();
  std::vector<std::pair<std::int64_t, Real>> values;
  mpq_class reference;
  std::string ref_text;
  std::string extra;

  if (cfg.family == "scan") {
    const ScanReport rep =
        theorem_consistency_scan(parse_theorem_case(cfg.theorem_case), c, cfg.Ns, cfg.trials, cfg.seed, cfg.threads);
    for (std::size_t i = 0; i < cfg.Ns.size(); ++i) values.emplace_back(cfg.Ns[i], rep.max_ratio[i]);
    reference = rep.reference_slope;
    ref_text = "-theta";
    extra = rep.to_text();
  } else if (cfg.family == "J" || cfg.family == "moment") {
    const int s = cfg.s_or_k;
    if (s < 1) throw HypothesisError("s must be >= 1");
    const CountOptions opt = count_options(cfg);
    for (auto N : cfg.Ns) {
      if (cfg.family == "J")
        values.emplace_back(N, to_real(count_homogeneous(c, s, N, CountMethod::mitm, opt).count));
      else
        values.emplace_back(N, moment_norm(c, s, N, opt));
    }
    const int e = std::max(s, 2 * s - D);
    reference = cfg.family == "J" ? mpq_class(e) : rational(e, 2 * s) - 1;
    ref_text = cfg.family == "J" ? "max(s, 2s-D)" : "max(s, 2s-D)/(2s) - 1";
  } else {
    const ExtremizerKind kind = parse_extremizer_kind(cfg.family);
    const ExponentPair e(parse_inverse_exponent(cfg.p), parse_inverse_exponent(cfg.q));
    for (auto N : cfg.Ns) {
      const auto sets = make_extremizer(kind, c, N, cfg.c_box);
      values.emplace_back(N, rwt_ratio(sets.E, sets.F, e, c, N));
    }
    switch (kind) {
      case ExtremizerKind::dirac: reference = -e.inv_q_dual(); ref_text = "-1/q'"; break;
      case ExtremizerKind::curve_image_dual: reference = -e.inv_p(); ref_text = "-1/p"; break;
      case ExtremizerKind::parabolic_box: reference = -D * e.inv_r(); ref_text = "-D(1/p-1/q)"; break;
    }
  }
  const FitResult fit = fit_exponent(values);
  Sink sink(cfg.out, out);
  *sink << "N,value\n";
  for (const auto& [N, v] : values) *sink << N << ',' << real_str(v) << '\n';
  if (!extra.empty()) out << extra;
  std::ostringstream line;
  line.precision(6);
  line << std::fixed << "family " << cfg.family << "  curve " << c.to_string() << "  slope " << fit.slope
       << "  intercept " << fit.intercept << "  max_residual " << fit.max_residual << "  reference " << ref_text
       << " = " << reference.get_str() << " (" << reference.get_d() << ")\n";
  out << line.str();
  return 0;
}

int cmd_refine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_Ns(cfg);
  if (cfg.Ns.size() != 1) throw HypothesisError("refine takes a single N");
  const Curve c = require_curve(cfg);
  const int k = cfg.s_or_k;
  if (k < 1 || k > 3) throw HypothesisError("k must be in {1,2,3}");
  const SparseSet E = read_set_file(cfg.set_E, c.dim()), F = read_set_file(cfg.set_F, c.dim());
  SubcriticalOptions opt;
  opt.y_cap = cfg.y_cap;
  opt.tower_budget = cfg.tower_budget;
  opt.threads = cfg.threads;
  const SubcriticalReport rep = verify_subcritical_instance(E, F, c, cfg.Ns[0], k, opt);
  Sink sink(cfg.out, out);
  *sink << rep.to_json() << '\n';
  out << rep.to_text();
  if (rep.budget_hit) {
    err << "tower budget exceeded (--tower-budget " << cfg.tower_budget << "); statistics above are partial\n";
    return 2;
  }
  return rep.ok() ? 0 : 1;
}

int cmd_riesz(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Curve c = require_curve(cfg);
  const RieszTable t = riesz_diagram_data(c, cfg.resolution);
  Sink sink(cfg.out, out);
  *sink << t.to_csv();
  if (sink.to_file())
    out << "vertex " << t.vertex.inv_p().get_str() << "," << t.vertex.inv_q().get_str() << " "
        << to_string(classify_exponents(c, t.vertex)) << "\n";
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(argc, argv);
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    if (!cfg.inject_fault.empty() && cfg.command != Command::verify)
      throw HypothesisError("--inject-fault only applies to verify");
    switch (cfg.command) {
      case Command::count: return cmd_count(cfg, out, err);
      case Command::verify: return cmd_verify(cfg, out, err);
      case Command::exponent: return cmd_exponent(cfg, out, err);
      case Command::refine: return cmd_refine(cfg, out, err);
      case Command::riesz: return cmd_riesz(cfg, out, err);
      case Command::none: break;
    }
    throw HypothesisError("no command given");
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    err << "hypothesis error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpi::cli
