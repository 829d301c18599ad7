#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vcminor/bitset.hpp"
#include "vcminor/graph.hpp"
#include "vcminor/patterns.hpp"
#include "vcminor/rdivision.hpp"
#include "vcminor/undirected.hpp"  // Cell helpers

namespace vcminor {

struct DirectedEccResult {
  std::vector<Dist> ecc;  // max over vertices reachable from u
  Dist diameter = 0;
  bool strongly_connected = false;
};

/// Directed eccentricities via infinite patterns. Per cluster, each vertex u
/// gets the boundary sequence re-based at its furthest reachable boundary
/// vertex (the maximum base condition); the per-pattern furthest payload is
/// materialized lazily and memoized in a per-cluster table. Vertices of the
/// home cluster take the min of the pattern route and in-cluster BFS.
DirectedEccResult directed_eccentricities(const Graph& g, int r, int threads = 1);

/// Exact distance oracle for unweighted digraphs: per-cluster tables of
/// distinct ball restrictions with d(Y -> v) payloads, plus per (u, cluster)
/// nested-ball lists searched by a monotone membership predicate.
class DirectedOracle {
 public:
  static DirectedOracle build(const Graph& g, int r, int threads = 1);

  Dist query(Vertex u, Vertex v) const;  // kUnreachable when no path

  int n() const { return n_; }
  int r() const { return r_; }
  const RDivision& division() const { return division_; }
  std::size_t space_bytes() const;
  int max_restriction_count() const;

  struct ClusterData {
    std::vector<Vertex> sigma;
    int size = 0;
    std::vector<Cell> intra;             // [lu * size + lv], global directed distances
    std::vector<Bitset> restrictions;    // distinct Y over local vertices
    std::vector<Cell> restr_dist;        // [rid * size + lv] = d(Y -> v); 0 iff v in Y
    std::vector<std::int64_t> l_off;     // n+1 offsets into l_radius / l_rid
    std::vector<Cell> l_radius;          // strictly increasing within each list
    std::vector<std::int32_t> l_rid;
    std::vector<Cell> u_to_boundary;     // [u * |sigma| + i] = d(u -> s_i)
  };

  int n_ = 0;
  int r_ = 0;
  RDivision division_;
  std::vector<int> local_index_;
  std::vector<ClusterData> clusters_;
};

/// Per-cluster context for the directed eccentricity pipeline, exposed so the
/// property suites can drive single (u, cluster) evaluations directly.
class DirectedClusterEcc {
 public:
  DirectedClusterEcc(const Graph& g, const Cluster& R);

  /// Delta(u -> R): max over vertices of R reachable from u of d_G(u -> v).
  /// nullopt when u reaches nothing in R.
  std::optional<Dist> delta_from(Vertex u);

  /// Distinct memoized patterns so far.
  int pattern_count() const { return table_.size(); }

  const Cluster& cluster() const { return *R_; }

 private:
  const Cluster* R_;
  int b_ = 0;
  std::vector<std::vector<Cell>> fwd_;   // [i][v] = d(s_i -> v)
  std::vector<std::vector<Cell>> rev_;   // [i][v] = d(v -> s_i)
  std::vector<Cell> dr_;                 // in-cluster directed distances
  std::vector<Bitset> reach_;            // reach(v, boundary) inside cluster
  PatternTable table_;
  std::vector<Dist> payload_;            // per pattern id: furthest defined distance

  Dist payload_for(const std::vector<int>& idx, const std::vector<Dist>& entries);
};

}  // namespace vcminor
