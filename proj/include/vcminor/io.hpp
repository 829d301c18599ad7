#pragma once

#include <iosfwd>
#include <string>

#include "vcminor/graph.hpp"

namespace vcminor {

/// Text edge-list format:
///   graph <n> <directed:0|1> <weighted:0|1>
///   u v [w]        (one edge per line; w only when weighted)
/// Lines starting with '#' are comments. Edges are written in canonical
/// order (undirected endpoints normalized u < v, then sorted), so
/// write(read(write(g))) is byte-identical to write(g).
void write_graph(const Graph& g, std::ostream& os);
void write_graph(const Graph& g, const std::string& path);

/// Parse errors report the offending line number.
Graph read_graph(std::istream& is, const std::string& name = "<stream>");
Graph read_graph(const std::string& path);

}  // namespace vcminor
