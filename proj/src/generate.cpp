#include "vcminor/generate.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace vcminor {

Graph make_grid(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("make_grid: dimensions must be >= 1");
  Graph g(w * h, false);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int v = y * w + x;
      if (x + 1 < w) g.add_edge(v, v + 1);
      if (y + 1 < h) g.add_edge(v, v + w);
    }
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  Graph g(n, false);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
  Graph g(n, false);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_random_tree: need n >= 1");
  std::mt19937_64 rng(seed);
  Graph g(n, false);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

namespace {

// Deletes candidate edges whose removal keeps the graph connected.
bool still_connected_without(int n, const std::vector<std::set<int>>& adj, int u, int v) {
  std::vector<char> seen(n, 0);
  std::deque<int> q{u};
  seen[u] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == v) return true;
    for (int y : adj[x]) {
      if ((x == u && y == v) || (x == v && y == u)) continue;
      if (!seen[y]) {
        seen[y] = 1;
        q.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace

Graph make_random_planar(int n, std::uint64_t seed, double delete_fraction) {
  if (n < 1) throw std::invalid_argument("make_random_planar: need n >= 1");
  if (delete_fraction < 0.0 || delete_fraction >= 1.0)
    throw std::invalid_argument("make_random_planar: delete_fraction in [0,1)");
  std::mt19937_64 rng(seed);

  std::vector<std::set<int>> adj(n);
  auto link = [&](int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  if (n >= 2) link(0, 1);
  if (n >= 3) {
    link(0, 2);
    link(1, 2);
  }
  std::vector<std::array<int, 3>> faces;
  if (n >= 3) faces.push_back({0, 1, 2});
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
    size_t f = pick(rng);
    auto [a, b, c] = faces[f];
    link(v, a);
    link(v, b);
    link(v, c);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }

  if (delete_fraction > 0.0 && n >= 3) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) edges.emplace_back(u, v);
    std::shuffle(edges.begin(), edges.end(), rng);
    size_t budget = static_cast<size_t>(delete_fraction * edges.size());
    for (size_t i = 0; i < edges.size() && budget > 0; ++i) {
      auto [u, v] = edges[i];
      if (still_connected_without(n, adj, u, v)) {
        adj[u].erase(v);
        adj[v].erase(u);
        --budget;
      }
    }
  }

  Graph g(n, false);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) g.add_edge(u, v);
  return g;
}

Graph orient_random(const Graph& g, std::uint64_t seed) {
  if (g.directed()) throw std::invalid_argument("orient_random: input already directed");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 9);
  Graph d(g.n(), true);
  for (const Edge& e : g.edges()) {
    int c = pick(rng);  // 0-3 forward, 4-7 backward, 8-9 both
    if (c < 4) {
      d.add_edge(e.u, e.v, e.w);
    } else if (c < 8) {
      d.add_edge(e.v, e.u, e.w);
    } else {
      d.add_edge(e.u, e.v, e.w);
      d.add_edge(e.v, e.u, e.w);
    }
  }
  return d;
}

Graph subdivide(const Graph& g) {
  Dist extra = 0;
  for (const Edge& e : g.edges()) extra += e.w - 1;
  if (g.n() + extra > (1LL << 31))
    throw std::runtime_error("subdivide: result too large");
  Graph s(static_cast<int>(g.n() + extra), g.directed());
  int next = g.n();
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    for (Dist k = 1; k < e.w; ++k) {
      s.add_edge(prev, next);
      prev = next++;
    }
    s.add_edge(prev, e.v);
  }
  return s;
}

}  // namespace vcminor
