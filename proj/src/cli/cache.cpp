#include <filesystem>
#include <fstream>

#include <boost/container_hash/hash.hpp>

#include "lpi/cli.hpp"
#include "lpi/errors.hpp"

namespace lpi::cli {

CountCache::CountCache(std::string path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  if (!in) throw ParseError("cannot read cache " + path_, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      CountRecord r = CountRecord::from_json_line(line);
      entries_[r.cache_key()] = std::move(r);
    } catch (const ParseError& e) {
      throw ParseError(path_ + ": " + e.what(), lineno);
    }
  }
}

std::optional<CountRecord> CountCache::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(const CountRecord& r) {
  CountRecord c = r;
  c.cached = false;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ParseError("cannot write cache " + path_, 0);
  out << c.to_json_line() << '\n';
  entries_[c.cache_key()] = std::move(c);
}

bool CountCache::audit_selected(const std::string& key, std::uint64_t seed) {
  std::size_t h = boost::hash<std::string>{}(key);
  boost::hash_combine(h, seed);
  return h % 100 == 0;
}

}  // namespace lpi::cli
