#pragma once

#include <cstdint>
#include <vector>

#include "vcminor/graph.hpp"
#include "vcminor/patterns.hpp"
#include "vcminor/rdivision.hpp"

namespace vcminor {

/// Cell type for the large distance tables (boundary rows, pattern payloads,
/// intra-cluster matrices). Unit-weight distances always fit.
using Cell = std::int32_t;
inline constexpr Cell kCellUnreachable = std::numeric_limits<Cell>::max();

inline Cell to_cell(Dist d) { return is_reachable(d) ? static_cast<Cell>(d) : kCellUnreachable; }
inline Dist from_cell(Cell c) { return c == kCellUnreachable ? kUnreachable : static_cast<Dist>(c); }

struct EccResult {
  std::vector<Dist> ecc;
  Dist diameter = 0;
};

/// All-vertices eccentricities through the r-division pipeline: per-cluster
/// pattern tables, per-pattern furthest-vertex payloads, then a max over
/// clusters with the in-cluster min-correction for the home cluster.
/// Requires a connected, unweighted, undirected graph.
EccResult eccentricities(const Graph& g, int r, int threads = 1);

/// Exact Wiener index (half the sum of all ordered distances), decomposed as
/// W(B,V) + sum_R W(interior, V(R)) + sum_R W(interior, outside) with the
/// last term served by per-pattern distance sums.
Dist wiener_index(const Graph& g, int r, int threads = 1);

/// Exact distance oracle: per-cluster pattern tables with full
/// pattern-to-vertex payload matrices, global intra-cluster tables, and a
/// {pattern-id, d(u,s0)} record per (vertex, cluster). O(1) lookups.
class UndirectedOracle {
 public:
  static UndirectedOracle build(const Graph& g, int r, int threads = 1);

  Dist query(Vertex u, Vertex v) const;

  int n() const { return n_; }
  int r() const { return r_; }
  const RDivision& division() const { return division_; }

  std::size_t space_bytes() const;
  /// Largest per-cluster distinct-pattern count (for cap checks).
  int max_pattern_count() const;
  /// Distinct patterns in cluster c.
  int pattern_count(int c) const { return static_cast<int>(clusters_[c].patterns.size()); }

  struct ClusterData {
    std::vector<Vertex> sigma;                 // boundary sequence
    std::vector<std::vector<Dist>> patterns;   // entries by pattern id
    std::vector<Cell> pat_dist;                // [pid * size + lv] = d(p, v)
    std::vector<Cell> intra;                   // [lu * size + lv], global distances
    int size = 0;
  };

  // Serialization and tests read these directly.
  int n_ = 0;
  int r_ = 0;
  RDivision division_;
  std::vector<int> local_index_;               // vertex -> position in its cluster
  std::vector<Vertex> boundary_vertices_;      // B, ascending
  std::vector<Cell> boundary_rows_;            // [b * n + v] = d(B[b], v)
  std::vector<ClusterData> clusters_;
  std::vector<std::int32_t> rec_pid_;          // [c * n + u]
  std::vector<Cell> rec_base_;                 // [c * n + u] = d(u, s0 of c)
};

/// Distance tuples of all vertices w.r.t. S, deduplicated.
struct TupleCompression {
  std::vector<Vertex> S;
  Dist diameter = 0;                        // D of the graph
  std::vector<std::vector<Dist>> tuples;    // distinct tuples by id
  std::vector<int> tuple_id;                // per vertex
  double cap = 0;                           // (D+1) * sum_{i<=4} C((|S|-1)(2D+1), i)
  bool within_cap = false;

  std::vector<Dist> tuple_of(Vertex v) const { return tuples[tuple_id[v]]; }
};

TupleCompression distance_tuples(const Graph& g, const std::vector<Vertex>& S);

/// D(B,V): one row per boundary vertex of the division, ascending by vertex.
std::vector<DistanceRow> boundary_distances(const Graph& g, const RDivision& div);

}  // namespace vcminor
