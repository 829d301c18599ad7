#include "vcminor/rdivision.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace vcminor {

namespace {

// All neighbors of u in the underlying undirected graph.
template <class F>
void for_each_undirected_neighbor(const Graph& g, Vertex u, F&& f) {
  for (const Arc& a : g.out(u)) f(a.to);
  if (g.directed())
    for (const Arc& a : g.in(u)) f(a.to);
}

// Connected components of the subgraph induced by `piece` (underlying
// undirected edges). `mark` must be n-sized, zeroed outside this call.
std::vector<std::vector<Vertex>> induced_components(const Graph& g,
                                                    const std::vector<Vertex>& piece,
                                                    std::vector<int>& mark,
                                                    int stamp) {
  for (Vertex v : piece) mark[v] = stamp;
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> done(piece.size(), 0);
  std::unordered_map<Vertex, size_t> idx;
  idx.reserve(piece.size());
  for (size_t i = 0; i < piece.size(); ++i) idx[piece[i]] = i;
  for (size_t i = 0; i < piece.size(); ++i) {
    if (done[i]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> q{piece[i]};
    done[i] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      comp.push_back(u);
      for_each_undirected_neighbor(g, u, [&](Vertex w) {
        if (mark[w] == stamp) {
          size_t j = idx[w];
          if (!done[j]) {
            done[j] = 1;
            q.push_back(w);
          }
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

// BFS levels inside the induced subgraph, rooted at `root`.
std::vector<int> induced_levels(const Graph& g, const std::vector<Vertex>& piece,
                                Vertex root, std::vector<int>& mark, int stamp,
                                std::unordered_map<Vertex, int>& level) {
  for (Vertex v : piece) mark[v] = stamp;
  level.clear();
  level[root] = 0;
  std::deque<Vertex> q{root};
  int maxlev = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    int lu = level[u];
    maxlev = std::max(maxlev, lu);
    for_each_undirected_neighbor(g, u, [&](Vertex w) {
      if (mark[w] == stamp && !level.count(w)) {
        level[w] = lu + 1;
        q.push_back(w);
      }
    });
  }
  std::vector<int> sizes(maxlev + 1, 0);
  for (auto& [v, l] : level) sizes[l]++;
  return sizes;
}

Vertex furthest_in_piece(const std::unordered_map<Vertex, int>& level) {
  Vertex best = -1;
  int bl = -1;
  for (auto& [v, l] : level)
    if (l > bl || (l == bl && v < best)) {
      bl = l;
      best = v;
    }
  return best;
}

}  // namespace

RDivision build_r_division(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("build_r_division: r must be >= 1");
  int n = g.n();
  r = std::min(r, std::max(n, 1));

  std::vector<int> mark(n, 0);
  int stamp = 0;
  std::unordered_map<Vertex, int> level;

  // Seed with the weak components, so disconnected input just works.
  std::vector<std::vector<Vertex>> stack;
  {
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    stack = induced_components(g, all, mark, ++stamp);
  }

  std::vector<std::vector<Vertex>> final_pieces;
  while (!stack.empty()) {
    std::vector<Vertex> piece = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(piece.size()) <= r) {
      final_pieces.push_back(std::move(piece));
      continue;
    }

    // Double sweep to get a pseudo-peripheral root, then split at the BFS
    // level that best balances the two sides.
    induced_levels(g, piece, piece.front(), mark, ++stamp, level);
    Vertex root = furthest_in_piece(level);
    std::vector<int> sizes = induced_levels(g, piece, root, mark, ++stamp, level);
    int k = static_cast<int>(sizes.size()) - 1;

    long long total = static_cast<long long>(piece.size());
    long long below = 0;
    int best_l = 0;
    long long best_gap = total + 1;
    for (int l = 0; l <= k; ++l) {
      long long above = total - below - sizes[l];
      long long gap = std::llabs(below - above);
      if (gap < best_gap) {
        best_gap = gap;
        best_l = l;
      }
      below += sizes[l];
    }

    std::vector<Vertex> side_a, side_b, sep;
    for (Vertex v : piece) {
      int l = level[v];
      if (l < best_l)
        side_a.push_back(v);
      else if (l > best_l)
        side_b.push_back(v);
      else
        sep.push_back(v);
    }
    auto& smaller = side_a.size() <= side_b.size() ? side_a : side_b;
    smaller.insert(smaller.end(), sep.begin(), sep.end());

    for (auto* side : {&side_a, &side_b}) {
      if (side->empty()) continue;
      for (auto& comp : induced_components(g, *side, mark, ++stamp))
        stack.push_back(std::move(comp));
    }
  }

  // Canonical order: by smallest contained vertex.
  for (auto& p : final_pieces) std::sort(p.begin(), p.end());
  std::sort(final_pieces.begin(), final_pieces.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  RDivision div;
  div.r = r;
  div.owner.assign(n, -1);
  div.clusters.resize(final_pieces.size());
  for (size_t c = 0; c < final_pieces.size(); ++c) {
    Cluster& cl = div.clusters[c];
    cl.id = static_cast<int>(c);
    cl.vertices = std::move(final_pieces[c]);
    for (Vertex v : cl.vertices) div.owner[v] = cl.id;
  }
  for (Cluster& cl : div.clusters) {
    for (Vertex v : cl.vertices) {
      bool on_boundary = false;
      for_each_undirected_neighbor(g, v, [&](Vertex w) {
        if (div.owner[w] != cl.id) on_boundary = true;
      });
      if (on_boundary) cl.boundary.push_back(v);
    }
    cl.boundary_sequence = cl.boundary;
  }
  return div;
}

DivisionQuality division_quality(const RDivision& div) {
  DivisionQuality q;
  q.cluster_count = static_cast<int>(div.clusters.size());
  for (const Cluster& c : div.clusters) {
    q.boundary_sum += c.boundary_size();
    q.max_boundary = std::max(q.max_boundary, c.boundary_size());
    q.max_cluster = std::max(q.max_cluster, c.size());
  }
  return q;
}

void dump_division(const RDivision& div, std::ostream& os) {
  for (const Cluster& c : div.clusters) {
    os << "cluster " << c.id << " v";
    for (Vertex v : c.vertices) os << ' ' << v;
    os << " b";
    for (Vertex v : c.boundary) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace vcminor
