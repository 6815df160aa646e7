#pragma once

#include "tfree/digraph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace tfree {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n <vertex count>
//   <u> <v>            one arc per line, 0-based
//
// Duplicate arc lines, self-loops and labels >= n are parse errors.
// Lines containing only whitespace are skipped.

Digraph read_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);
Digraph load_edge_list(const std::string& path);

/// Writes `n <N>` then one `u v` line per arc in lexicographic order.
void write_edge_list(std::ostream& out, const Digraph& g);
std::string to_edge_list(const Digraph& g);

}  // namespace tfree
