#pragma once

#include "fairdom/graph.hpp"

#include <iosfwd>
#include <string>

namespace fairdom {

// Text format:
//   # comment
//   n 5
//   1 2
//   2 3
// The `n <count>` header is mandatory and must precede the edges; endpoints are 1-based.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace fairdom
