#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace vcminor {

using Vertex = int;
using EdgeId = int;
using Dist = std::int64_t;

/// Sentinel for "no path". Compares greater than every finite distance;
/// never do arithmetic on it directly, go through dist_add().
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

inline constexpr bool is_reachable(Dist d) { return d != kUnreachable; }

inline constexpr Dist dist_add(Dist a, Dist b) {
  return (a == kUnreachable || b == kUnreachable) ? kUnreachable : a + b;
}

struct Edge {
  Vertex u;
  Vertex v;
  Dist w;
};

/// Adjacency entry: the neighbor on the other side of `edge`.
struct Arc {
  Vertex to;
  EdgeId edge;
};

/// Unweighted or positive-integer-weighted graph, optionally directed.
/// Undirected graphs store each edge once and expose it from both endpoints.
/// Immutable once populated; concurrent reads are safe.
class Graph {
 public:
  Graph(int n, bool directed);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  bool unit_weights() const { return all_unit_; }

  EdgeId add_edge(Vertex u, Vertex v, Dist w = 1);

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Out-neighbors (all neighbors when undirected).
  std::span<const Arc> out(Vertex u) const { return out_[u]; }
  /// In-neighbors (same as out() when undirected).
  std::span<const Arc> in(Vertex u) const { return directed_ ? std::span<const Arc>(in_[u]) : std::span<const Arc>(out_[u]); }

  Dist total_weight() const;

 private:
  int n_;
  bool directed_;
  bool all_unit_ = true;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;  // populated only when directed
};

struct DistanceRow {
  Vertex source = 0;
  std::vector<Dist> dist;
};

/// Exact single-source distances: BFS on unit weights, Dijkstra otherwise.
/// reverse=true computes d(. -> s) in digraphs; no-op for undirected graphs.
DistanceRow sssp(const Graph& g, Vertex s, bool reverse = false);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {}
  int n() const { return n_; }
  Dist at(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  Dist& at(Vertex u, Vertex v) { return d_[static_cast<size_t>(u) * n_ + v]; }
  std::span<const Dist> row(Vertex u) const { return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)}; }

 private:
  int n_ = 0;
  std::vector<Dist> d_;
};

/// Brute-force all-pairs table; the trusted oracle the fast paths are tested
/// against. Refuses graphs above `cap` vertices (n^2 storage).
DistanceMatrix all_pairs(const Graph& g, int cap = 5000);

/// Parent edges of the shortest-path tree rooted at v, covering vertices
/// reachable from v. Ties between candidate parents are broken globally by
/// (smaller vertex id, then smaller edge id), so trees are deterministic.
/// Returned edge ids are sorted.
std::vector<EdgeId> shortest_path_tree(const Graph& g, Vertex v);

/// Connected components of the underlying undirected graph.
std::vector<int> weak_components(const Graph& g);

bool is_weakly_connected(const Graph& g);

/// True if every ordered pair is connected (directed reachability).
bool is_strongly_connected(const Graph& g);

}  // namespace vcminor
