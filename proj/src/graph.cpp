#include "vcminor/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>
#include <string>

namespace vcminor {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  out_.resize(n);
  if (directed) in_.resize(n);
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Dist w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("add_edge: vertex id out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (w < 1) throw std::invalid_argument("add_edge: weight must be >= 1");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, w});
  if (w != 1) all_unit_ = false;
  out_[u].push_back({v, id});
  if (directed_) {
    in_[v].push_back({u, id});
  } else {
    out_[v].push_back({u, id});
  }
  return id;
}

Dist Graph::total_weight() const {
  Dist s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

namespace {

DistanceRow bfs(const Graph& g, Vertex s, bool reverse) {
  DistanceRow r;
  r.source = s;
  r.dist.assign(g.n(), kUnreachable);
  r.dist[s] = 0;
  std::deque<Vertex> q{s};
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    Dist du = r.dist[u];
    for (const Arc& a : reverse ? g.in(u) : g.out(u)) {
      if (r.dist[a.to] == kUnreachable) {
        r.dist[a.to] = du + 1;
        q.push_back(a.to);
      }
    }
  }
  return r;
}

DistanceRow dijkstra(const Graph& g, Vertex s, bool reverse) {
  DistanceRow r;
  r.source = s;
  r.dist.assign(g.n(), kUnreachable);
  r.dist[s] = 0;
  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du != r.dist[u]) continue;
    for (const Arc& a : reverse ? g.in(u) : g.out(u)) {
      Dist nd = du + g.edge(a.edge).w;
      if (nd < r.dist[a.to]) {
        r.dist[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return r;
}

}  // namespace

DistanceRow sssp(const Graph& g, Vertex s, bool reverse) {
  if (s < 0 || s >= g.n()) throw std::invalid_argument("sssp: source out of range");
  if (!g.directed()) reverse = false;
  return g.unit_weights() ? bfs(g, s, reverse) : dijkstra(g, s, reverse);
}

DistanceMatrix all_pairs(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::runtime_error("all_pairs: graph has " + std::to_string(g.n()) +
                             " vertices, cap is " + std::to_string(cap));
  DistanceMatrix m(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    DistanceRow r = sssp(g, u, false);
    for (Vertex v = 0; v < g.n(); ++v) m.at(u, v) = r.dist[v];
  }
  return m;
}

std::vector<EdgeId> shortest_path_tree(const Graph& g, Vertex v) {
  DistanceRow r = sssp(g, v, false);
  std::vector<EdgeId> tree;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (u == v || !is_reachable(r.dist[u])) continue;
    Vertex best_p = -1;
    EdgeId best_e = -1;
    for (const Arc& a : g.in(u)) {
      Vertex p = a.to;
      if (!is_reachable(r.dist[p]) || r.dist[p] + g.edge(a.edge).w != r.dist[u]) continue;
      if (best_p == -1 || p < best_p || (p == best_p && a.edge < best_e)) {
        best_p = p;
        best_e = a.edge;
      }
    }
    tree.push_back(best_e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<int> weak_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  int c = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (const Arc& a : g.out(u))
        if (comp[a.to] == -1) {
          comp[a.to] = c;
          q.push_back(a.to);
        }
      if (g.directed())
        for (const Arc& a : g.in(u))
          if (comp[a.to] == -1) {
            comp[a.to] = c;
            q.push_back(a.to);
          }
    }
    ++c;
  }
  return comp;
}

bool is_weakly_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto comp = weak_components(g);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

bool is_strongly_connected(const Graph& g) {
  if (g.n() == 0) return true;
  if (!g.directed()) return is_weakly_connected(g);
  auto reach_count = [&](bool reverse) {
    DistanceRow r = sssp(g, 0, reverse);
    int k = 0;
    for (Dist d : r.dist) k += is_reachable(d);
    return k;
  };
  return reach_count(false) == g.n() && reach_count(true) == g.n();
}

}  // namespace vcminor
