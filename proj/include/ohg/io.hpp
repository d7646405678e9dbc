#pragma once

#include <string>
#include <string_view>

#include "ohg/core.hpp"
#include "ohg/geometry.hpp"
#include "ohg/states.hpp"

namespace ohg::io {

/// Context list: one context per line, vertex names separated by whitespace,
/// '#' starts a comment. Throws ParseError or the Hypergraph::build errors.
Hypergraph parse_ohg(std::string_view text);
/// One line per context, names separated by single spaces.
std::string write_ohg(const Hypergraph& h);

/// "vertices: n1 n2 ..." followed by one row of space-separated 0/1 digits per
/// state. '#' comments allowed.
TravisMatrix parse_matrix(std::string_view text);
std::string write_matrix(const TravisMatrix& t);

/// Whether the text looks like a matrix file (first content line is the header).
bool looks_like_matrix(std::string_view text);

/// "name: c1 c2 ... cn" per line.
VectorLabeling parse_vectors(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ohg::io
