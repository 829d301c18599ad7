#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcminor/graph.hpp"

namespace vcminor {

using BigInt = boost::multiprecision::cpp_int;

struct BigEdge {
  Vertex u;
  Vertex v;
  BigInt w;
};

/// The planar-digraph shattering gadget. A path P carries the r special
/// edges e_j = (u_j -> v_j); consecutive sections are insulated by sink
/// connectors (v_{j+1} -> x_j) and (u_j -> x_j). Anchor a_i (one per bit
/// string of length r) hangs two horizontal paths off the plane: Q^i_1 over
/// y-vertices toward the v side and Q^i_2 over z-vertices toward the u side,
/// every edge weighing M - 2*A_i. Column j descends one level per anchor:
/// bit s_i[j] = 1 puts weight A_i on the y-side step and 1 on the z-side
/// step, bit 0 swaps them; level 0 joins y_{0j} -> v_j (weight 1) and
/// z_{0j} -> u_j (weight A_0). Then the shortest-path tree of a_i picks up
/// exactly the e_j with s_i[j] = 1.
struct Gadget {
  int r = 0;
  int n = 0;
  std::vector<BigEdge> edges;
  std::vector<EdgeId> X;        // e_1..e_r (ids into edges)
  std::vector<Vertex> anchors;  // a_0..a_{2^r-1}
  std::vector<BigInt> A;
  BigInt M;

  // Construction coordinates, handy for path-shape checks.
  std::vector<Vertex> u_endpoint, v_endpoint, sinks;  // u_j, v_j, x_j (j-1 indexed)
  std::vector<std::vector<Vertex>> y, z;              // y[i][j], j in 0..r; y[i][0] == anchors[i]

  bool bit(int i, int j) const { return (i >> (j - 1)) & 1; }  // s_i[j], j in [1,r]
};

/// Builds the gadget with A_i = 4*A_{i-1}. M <= 0 means auto: 10 * A_max.
Gadget build_gadget(int r, BigInt a0 = 2, BigInt m = 0);

/// Test hook: arbitrary A sequence (size 2^r), explicit M.
Gadget build_gadget_with_sequence(int r, std::vector<BigInt> A, BigInt m);

struct ShatterReport {
  bool pass = false;
  bool structure_ok = false;  // growth inequality and positive edge weights
  int subsets_checked = 0;
  int subsets_realized = 0;
  std::vector<std::string> failures;
};

/// Checks the growth inequality A_i >= 2*A_t + (A_{i-1}+...+A_0+1) for every
/// t < i and that all edge weights are >= 1 (an undersized M fails here: the
/// gadget must subdivide into a unit-weight digraph). If weights are at least
/// nonnegative, also sweeps every anchor's shortest-path tree and compares
/// its X-intersection against the anchor's bit string, and checks that every
/// e_j endpoint has a unique tight predecessor.
ShatterReport verify_shattering(const Gadget& gd);

struct BigDistances {
  std::vector<char> reached;
  std::vector<BigInt> dist;
  std::vector<EdgeId> parent_edge;  // tight in-edge with smallest (vertex, edge), -1 at root/unreached
};

/// Dijkstra over the big-int weights; skip_edge removes one edge (-1: none).
BigDistances gadget_dijkstra(const Gadget& gd, Vertex s, EdgeId skip_edge = -1);

struct UnweightedGadget {
  Graph graph{0, true};
  std::vector<EdgeId> X;
  std::vector<Vertex> anchors;
  int r = 0;
};

/// Subdivides every weight-w edge into w unit edges. X edges have weight 1
/// and map to themselves. Refuses results above `cap` vertices.
UnweightedGadget to_unweighted(const Gadget& gd, long long cap = 2000000);

/// Same sweep as verify_shattering, over the unit-weight digraph.
ShatterReport verify_shattering(const UnweightedGadget& gd);

/// Standard edge-list text format; weights printed in full precision.
void write_gadget_graph(const Gadget& gd, std::ostream& os);

}  // namespace vcminor
