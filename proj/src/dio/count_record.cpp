#include <stdexcept>

#include <json.hpp>

#include "lpi/count.hpp"
#include "lpi/errors.hpp"

namespace lpi {

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::mitm: return "mitm";
    case CountMethod::lemma1: return "lemma1";
    case CountMethod::lemma2: return "lemma2";
    case CountMethod::lemma3: return "lemma3";
  }
  return "?";
}

std::string to_string(CountMode m) { return m == CountMode::homogeneous ? "homogeneous" : "inhomogeneous"; }

CountMethod parse_count_method(const std::string& s) {
  for (auto m : {CountMethod::brute, CountMethod::mitm, CountMethod::lemma1, CountMethod::lemma2, CountMethod::lemma3})
    if (to_string(m) == s) return m;
  throw HypothesisError("unknown count method '" + s + "'");
}

std::string CountRecord::to_json_line() const {
  nlohmann::ordered_json j;
  j["curve"] = curve;
  j["mode"] = to_string(mode);
  j["s_or_k"] = s_or_k;
  j["N"] = N;
  j["z"] = z;
  j["count"] = count.get_str();
  j["method"] = to_string(method);
  j["elapsed"] = elapsed;
  j["cached"] = cached;
  if (outside_hypothesis) j["outside_hypothesis"] = true;
  return j.dump();
}

CountRecord CountRecord::from_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CountRecord r;
    r.curve = j.at("curve").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "homogeneous" && mode != "inhomogeneous") throw HypothesisError("bad mode '" + mode + "'");
    r.mode = mode == "homogeneous" ? CountMode::homogeneous : CountMode::inhomogeneous;
    r.s_or_k = j.at("s_or_k").get<int>();
    r.N = j.at("N").get<std::int64_t>();
    r.z = j.at("z").get<std::vector<std::int64_t>>();
    if (r.count.set_str(j.at("count").get<std::string>(), 10) != 0) throw HypothesisError("bad count");
    r.method = parse_count_method(j.at("method").get<std::string>());
    r.elapsed = j.at("elapsed").get<double>();
    r.cached = j.value("cached", false);
    r.outside_hypothesis = j.value("outside_hypothesis", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed count record: ") + e.what(), 0);
  }
}

std::string CountRecord::cache_key() const {
  std::string k = curve + "|" + to_string(mode) + "|" + std::to_string(s_or_k) + "|" + std::to_string(N) + "|";
  for (std::size_t i = 0; i < z.size(); ++i) k += (i ? "," : "") + std::to_string(z[i]);
  return k + "|" + to_string(method);
}

}  // namespace lpi
