#include "lpi/set_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

std::vector<std::string> tokens_of(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& t, std::size_t line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + t + "'", line);
  }
  if (used != t.size()) throw ParseError("invalid integer '" + t + "'", line);
  return v;
}

LatticePoint point_of(const std::vector<std::string>& tok, std::size_t count, std::size_t line) {
  LatticePoint p(count);
  for (std::size_t j = 0; j < count; ++j) p[j] = parse_int(tok[j], line);
  return p;
}

void check_width(std::size_t got, std::size_t& dim, std::size_t line) {
  if (dim == 0) dim = got;
  if (got != dim)
    throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(got), line);
}

}  // namespace

SparseSet read_set(std::istream& in, std::size_t dim) {
  std::vector<LatticePoint> pts;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto tok = tokens_of(raw);
    if (tok.empty()) continue;
    check_width(tok.size(), dim, lineno);
    pts.push_back(point_of(tok, tok.size(), lineno));
  }
  return SparseSet(dim, std::move(pts));
}

SparseSet read_set_file(const std::string& path, std::size_t dim) {
  std::ifstream in(path);
  if (!in) throw HypothesisError("cannot open set file '" + path + "'");
  return read_set(in, dim);
}

void write_set(std::ostream& out, const SparseSet& s) {
  for (const auto& p : s) {
    for (std::size_t j = 0; j < p.dim(); ++j) out << (j ? " " : "") << p[j];
    out << '\n';
  }
}

SparseFunction read_function(std::istream& in, std::size_t dim) {
  std::vector<std::pair<LatticePoint, mpq_class>> rows;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto tok = tokens_of(raw);
    if (tok.empty()) continue;
    if (tok.size() < 2) throw ParseError("function line needs a point and a value", lineno);
    check_width(tok.size() - 1, dim, lineno);
    mpq_class v;
    if (v.set_str(tok.back(), 10) != 0 || v.get_den() == 0)
      throw ParseError("invalid value '" + tok.back() + "'", lineno);
    v.canonicalize();
    rows.emplace_back(point_of(tok, tok.size() - 1, lineno), v);
  }
  SparseFunction f(dim);
  for (const auto& [p, v] : rows) f.add(p, v);
  return f;
}

void write_function(std::ostream& out, const SparseFunction& f) {
  for (const auto& [p, v] : f.sorted_entries()) {
    for (std::size_t j = 0; j < p.dim(); ++j) out << p[j] << ' ';
    out << v.get_str() << '\n';
  }
}

}  // namespace lpi
