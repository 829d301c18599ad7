#pragma once

#include <span>
#include <vector>

#include "vcminor/bitset.hpp"
#include "vcminor/graph.hpp"
#include "vcminor/rdivision.hpp"

namespace vcminor {

/// Difference vector of a vertex against a cluster's boundary sequence:
/// entries[i] = d(u, s_i) - d(u, s_0). entries[0] == 0 always.
struct Pattern {
  std::vector<Dist> entries;
};

/// d_u_to_boundary[i] = d(u, s_i) in sigma order; all entries must be finite
/// (undirected connected pipeline).
Pattern make_pattern(std::span<const Dist> d_u_to_boundary);

/// min_i { d(v, s_i) + p[i] }, the distance from a pattern to a vertex.
Dist pattern_distance(const Pattern& p, std::span<const Dist> d_v_to_boundary);

/// Entry sentinels for infinite patterns. Entries of a cluster of size r are
/// clipped to [-(r-1), r-1]; differences beyond that collapse to these.
inline constexpr Dist kNegInfEntry = std::numeric_limits<Dist>::min();
inline constexpr Dist kPosInfEntry = std::numeric_limits<Dist>::max();

/// Pattern with +-infinity markers, re-based so that `order[0]` (a position
/// into sigma_R) is the base boundary vertex; remaining positions keep sigma
/// order. entries align with `order`.
struct InfinitePattern {
  int cluster_size = 0;  // r in the clipping thresholds
  std::vector<int> order;
  std::vector<Dist> entries;
};

/// d_u_to_boundary[i] = d(u -> s_i); kUnreachable allowed (maps to +inf
/// entries). The base distance must be finite. Clipping:
///   diff <= -r        -> -inf
///   |diff| <= r - 1   -> diff
///   diff >= r         -> +inf   (also unreachable s_i)
InfinitePattern make_infinite_pattern(std::span<const Dist> d_u_to_boundary,
                                      int base, int cluster_size);

/// Per-vertex sets of boundary vertices that can reach the vertex via
/// directed paths *inside the cluster*. Indexed by local vertex position
/// (cluster.vertices order); bit i refers to boundary_sequence[i].
std::vector<Bitset> reach_sets(const Graph& g, const Cluster& R);

struct PatternDistance {
  enum class Kind { finite, neg_inf, undefined };
  Kind kind = Kind::finite;
  Dist value = 0;

  bool finite() const { return kind == Kind::finite; }
};

/// Distance from an infinite pattern to v: undefined when any entry is +inf;
/// otherwise the minimum of d(s_i -> v) + p[i] over boundary vertices that
/// reach v in the cluster, where a -inf entry forces -inf and an empty reach
/// set yields -inf. boundary_to_v[i] = d_G(s_i -> v) in sigma order.
PatternDistance infinite_pattern_distance(const InfinitePattern& p,
                                          const Bitset& reach_v,
                                          std::span<const Dist> boundary_to_v);

/// Position of v in the cluster's sorted vertex list, -1 if absent.
int local_index(const Cluster& R, Vertex v);

/// Deduplicating table of patterns: a trie over entry sequences mapping each
/// distinct sequence to a dense id. Payloads live in caller-side vectors
/// indexed by id.
class PatternTable {
 public:
  /// Returns the id for the key, inserting it if new.
  int insert(std::span<const Dist> key);
  /// Returns the id or -1 when the key is absent.
  int lookup(std::span<const Dist> key) const;
  int size() const { return count_; }

 private:
  struct Node {
    std::vector<std::pair<Dist, int>> next;  // sorted by key step
    int id = -1;
  };
  int child(int node, Dist step) const;
  std::vector<Node> nodes_{1};
  int count_ = 0;
};

/// Trie key of a finite pattern: the entry sequence itself.
std::vector<Dist> trie_key(const Pattern& p);

/// Trie key of an infinite pattern: base position, then entries with the two
/// sentinels encoded as the reserved codes -r and +r (outside [-(r-1), r-1]).
std::vector<Dist> trie_key(const InfinitePattern& p);

}  // namespace vcminor
