#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace dsrpm {

/// Standard graph6: N(n) header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
/// A leading ">>graph6<<" header and trailing newline are tolerated.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "u v" per line, 0-indexed; '#' starts a comment. An optional "n <count>" line fixes the order,
/// otherwise it is one more than the largest label seen.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace dsrpm
