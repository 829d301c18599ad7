#pragma once

#include <cstdint>

#include "vcminor/graph.hpp"

namespace vcminor {

/// w*h grid, vertex (x,y) -> index y*w + x.
Graph make_grid(int w, int h);

Graph make_cycle(int n);

Graph make_path(int n);

/// Random attachment tree on n vertices.
Graph make_random_tree(int n, std::uint64_t seed);

/// Random planar graph: incremental triangulation (each new vertex is placed
/// inside a random face and joined to its three corners), then a seeded pass
/// that deletes a fraction of edges while keeping the graph connected.
/// Planarity holds by construction. delete_fraction in [0,1).
Graph make_random_planar(int n, std::uint64_t seed, double delete_fraction = 0.25);

/// Digraph from an undirected graph: each edge keeps one direction, the other
/// direction, or both, chosen at random. Output graphs are generally not
/// strongly connected.
Graph orient_random(const Graph& g, std::uint64_t seed);

/// Replace each weight-w edge by a w-edge unit path. Preserves all pairwise
/// distances between original vertices; original vertices keep their ids.
Graph subdivide(const Graph& g);

}  // namespace vcminor
