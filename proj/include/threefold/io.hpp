#ifndef THREEFOLD_IO_HPP
#define THREEFOLD_IO_HPP

#include <iosfwd>
#include <string>

#include "threefold/ideal.hpp"

namespace threefold {

// Plain-text ideal format: header `ring p=<prime> vars=<n>`, then one
// generator per line, variables x0..x{n-1}, coefficients as decimal residues.
std::string format_ideal(const Ideal& I);
Ideal parse_ideal(std::istream& in);
Ideal parse_ideal_string(const std::string& text);

Poly parse_poly(const std::string& line, Ring r, int lineno = 0);

void write_ideal_file(const Ideal& I, const std::string& path);
Ideal read_ideal_file(const std::string& path);

}  // namespace threefold

#endif
