#pragma once

#include <iosfwd>
#include <vector>

#include "vcminor/graph.hpp"

namespace vcminor {

/// One cluster of an r-division. `vertices` is sorted; `boundary` is the
/// subset with at least one neighbor (either direction) outside the cluster.
/// boundary_sequence is the ordered sigma_R used by pattern code; by default
/// it equals `boundary` (ascending vertex id).
struct Cluster {
  int id = 0;
  std::vector<Vertex> vertices;
  std::vector<Vertex> boundary;
  std::vector<Vertex> boundary_sequence;

  int size() const { return static_cast<int>(vertices.size()); }
  int boundary_size() const { return static_cast<int>(boundary.size()); }
};

/// Cover of the graph by connected induced clusters of at most r vertices.
/// Every vertex is owned by exactly one cluster; boundary status is computed
/// against the whole graph.
struct RDivision {
  int r = 0;
  std::vector<Cluster> clusters;
  std::vector<int> owner;  // vertex -> cluster id

  const Cluster& cluster_of(Vertex v) const { return clusters[owner[v]]; }
};

/// Heuristic r-division by recursive bisection: a too-large piece is split by
/// removing a middle BFS level (on the underlying undirected graph) chosen to
/// balance the two sides; separator vertices join the smaller side; pieces
/// that come out disconnected are split into their components. Works
/// per-component on disconnected input.
RDivision build_r_division(const Graph& g, int r);

struct DivisionQuality {
  int cluster_count = 0;
  long long boundary_sum = 0;  // sum over clusters of |boundary|
  int max_boundary = 0;
  int max_cluster = 0;
};

DivisionQuality division_quality(const RDivision& div);

/// One cluster per line: id, vertex list, boundary list. For golden files.
void dump_division(const RDivision& div, std::ostream& os);

}  // namespace vcminor
