#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "lpi/sparse.hpp"

namespace lpi {

// Text formats: one point per line as whitespace-separated integers; a
// function line appends the value as "p/q" (or an integer). '#' starts a
// comment. ParseError positions are 1-based line numbers.

/// `dim == 0` infers the dimension from the first point.
SparseSet read_set(std::istream& in, std::size_t dim = 0);
SparseSet read_set_file(const std::string& path, std::size_t dim = 0);
void write_set(std::ostream& out, const SparseSet& s);

SparseFunction read_function(std::istream& in, std::size_t dim = 0);
void write_function(std::ostream& out, const SparseFunction& f);

}  // namespace lpi
