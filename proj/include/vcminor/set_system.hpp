#pragma once

#include <string>
#include <vector>

#include "vcminor/bitset.hpp"
#include "vcminor/graph.hpp"

namespace vcminor {

/// Element of a set-system ground set: a vertex, an (index, delta) pair, or
/// an edge, depending on which system produced the family.
struct GroundElement {
  enum class Kind { vertex, pair, edge };
  Kind kind = Kind::vertex;
  int a = 0;       // vertex id, pair index i (>= 1), or edge id
  Dist delta = 0;  // pair elements only

  std::string to_string() const;
};

/// Deduplicated family of subsets over a fixed ground set.
struct SetFamily {
  int ground_size = 0;
  std::vector<Bitset> sets;
  std::vector<std::string> labels;           // per-set provenance, optional
  std::vector<GroundElement> ground;         // per-element meaning, optional
  std::vector<Vertex> excluded;              // vertices dropped (directed lp systems)

  int size() const { return static_cast<int>(sets.size()); }
  /// Adds the set if not already present; returns whether it was new.
  bool add(const Bitset& b, std::string label = {});
};

/// Balls of every realized radius around every center. Directed balls use
/// d(v -> u). Ground set: vertices.
SetFamily ball_system(const Graph& g, int cap = 64);

/// The difference set system over terminals S and offsets M: element (i, Delta)
/// is in the set of v iff d(v, s_i) - d(v, s_0) <= Delta. Directed graphs use
/// d(v -> s_i); vertices that cannot reach s_0 are excluded (and recorded).
/// Ground set: [1, k-1] x M, laid out row-major by i.
SetFamily lp_hat_system(const Graph& g, const std::vector<Vertex>& S,
                        const std::vector<Dist>& M);

/// Original consecutive-difference variant: d(v, s_i) - d(v, s_{i-1}) <= Delta.
/// Built for experimentation only; no VC cap is asserted anywhere.
SetFamily lp_system(const Graph& g, const std::vector<Vertex>& S,
                    const std::vector<Dist>& M);

/// One edge set per root: the deterministic shortest-path tree. Ground: edges.
SetFamily sp_tree_system(const Graph& g, int cap = 64);

struct VcResult {
  int dimension = 0;
  bool reached_cap = false;        // true: exhaustive search stopped, VC >= dimension
  std::vector<int> witness;        // a largest shattered subset found
};

/// Exact VC dimension by incremental exhaustive search: shattered (d+1)-sets
/// are built only from shattered d-sets (a set can only be shattered if all
/// its subsets are). `cap` bounds the search depth; results at the cap are
/// reported as "VC >= cap".
VcResult vc_dimension(const SetFamily& f, int cap = 7);

/// {Y ∩ X : Y in f}, deduplicated and re-indexed over X (sorted element ids).
SetFamily restrict_family(const SetFamily& f, const std::vector<int>& X);

struct SauerShelahReport {
  long long family_size = 0;
  int ground_size = 0;
  int k = 0;
  double bound = 0;   // sum_{i<=k} C(n, i), saturated to double
  double ratio = 0;   // family_size / bound
  bool violated = false;
};

/// Checks |f| against the exact Sauer-Shelah bound for VC dimension k.
SauerShelahReport sauer_shelah_check(const SetFamily& f, int k);

/// sum_{i<=k} C(n, i) for reporting (saturates at 1e30).
long double sauer_shelah_bound(long long n, int k);

/// Exact integer comparison family_size <= sum_{i<=k} C(n, i).
bool sauer_shelah_holds(long long family_size, long long n, int k);

}  // namespace vcminor
