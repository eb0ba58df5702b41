#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpi/count.hpp"
#include "lpi/refinement.hpp"

namespace lpi::cli {

enum class Command { none, count, verify, exponent, refine, riesz };

struct RunConfig {
  Command command = Command::none;
  std::string curve_text = "n,n^2";
  bool curve_given = false;  // lemma3 falls back to n,n^2,n^3 otherwise
  std::vector<std::int64_t> Ns;
  int s_or_k = 1;
  std::vector<std::int64_t> z;
  std::string method = "mitm";
  std::uint64_t budget_tuples = 4'000'000'000ULL;
  std::uint64_t seed = 1;
  std::string out;    // empty: stdout
  std::string cache;  // empty: no cache
  mpq_class c_box = 1;
  int threads = 0;
  bool no_timing = false;
  std::string inject_fault;

  // verify
  std::vector<std::string> suites;
  bool suites_given = false;
  // exponent
  std::string family = "dirac";
  std::string p = "3/2", q = "3";
  std::string theorem_case = "i";
  int trials = 4;
  // refine
  std::string set_E, set_F;
  std::size_t y_cap = 32;
  std::uint64_t tower_budget = 50'000'000;
  // riesz
  int resolution = 12;

  /// Throws HypothesisError on non-positive budgets or unsorted/duplicate N.
  void validate() const;
};

/// Thrown by parse_args for --help; carries the formatted text.
struct HelpRequested {
  std::string text;
};

/// Parses argv (CLI flags, then a flat key=value --config file for anything
/// not given on the command line). Throws CLI11 errors or ParseError.
RunConfig parse_args(int argc, const char* const* argv);

/// Reads `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> read_flat_config(const std::string& path);

/// Parse, run and map exceptions to exit codes (0 ok, 1 usage or hypothesis,
/// 2 budget).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_exponent(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_refine(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_riesz(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// JSON-lines store of CountRecords keyed by `CountRecord::cache_key`.
class CountCache {
 public:
  /// Loads `path` if it exists; malformed lines throw ParseError.
  explicit CountCache(std::string path);
  std::optional<CountRecord> find(const std::string& key) const;
  /// Appends to the file and the in-memory index.
  void store(const CountRecord& r);
  std::size_t size() const noexcept { return entries_.size(); }

  /// Deterministic 1% selection of hits for recomputation.
  static bool audit_selected(const std::string& key, std::uint64_t seed);

 private:
  std::string path_;
  std::map<std::string, CountRecord> entries_;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyCheck> checks;
  bool ok() const;
};

/// Known suite names in run order.
const std::vector<std::string>& suite_names();
/// Known fault names for --inject-fault.
const std::vector<std::string>& fault_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, const std::string& fault, int threads);

}  // namespace lpi::cli
