#include "vcminor/lower_bound.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace vcminor {

Gadget build_gadget(int r, BigInt a0, BigInt m) {
  if (r < 1 || r > 12) throw std::invalid_argument("build_gadget: r must be in [1,12]");
  if (a0 < 2) throw std::invalid_argument("build_gadget: A0 must be >= 2");
  int levels = 1 << r;
  std::vector<BigInt> A(levels);
  A[0] = a0;
  for (int i = 1; i < levels; ++i) A[i] = 4 * A[i - 1];
  if (m <= 0) m = 10 * A.back();
  return build_gadget_with_sequence(r, std::move(A), std::move(m));
}

Gadget build_gadget_with_sequence(int r, std::vector<BigInt> A, BigInt m) {
  if (r < 1 || r > 12) throw std::invalid_argument("build_gadget: r must be in [1,12]");
  int levels = 1 << r;
  if (static_cast<int>(A.size()) != levels)
    throw std::invalid_argument("build_gadget: A sequence must have 2^r entries");
  Gadget gd;
  gd.r = r;
  gd.A = std::move(A);
  gd.M = std::move(m);

  int next = 0;
  auto fresh = [&next] { return next++; };

  gd.u_endpoint.resize(r);
  gd.v_endpoint.resize(r);
  gd.sinks.resize(r - 1);
  for (int j = 0; j < r; ++j) {
    gd.u_endpoint[j] = fresh();
    gd.v_endpoint[j] = fresh();
  }
  for (int j = 0; j + 1 < r; ++j) gd.sinks[j] = fresh();

  auto add = [&gd](Vertex u, Vertex v, BigInt w) {
    EdgeId id = static_cast<EdgeId>(gd.edges.size());
    gd.edges.push_back({u, v, std::move(w)});
    return id;
  };

  // Path P: the r special edges plus sink connectors between sections.
  gd.X.resize(r);
  for (int j = 0; j < r; ++j) gd.X[j] = add(gd.u_endpoint[j], gd.v_endpoint[j], 1);
  for (int j = 0; j + 1 < r; ++j) {
    add(gd.v_endpoint[j + 1], gd.sinks[j], 1);
    add(gd.u_endpoint[j], gd.sinks[j], 1);
  }

  gd.anchors.resize(levels);
  gd.y.assign(levels, std::vector<Vertex>(r + 1));
  gd.z.assign(levels, std::vector<Vertex>(r + 1));
  for (int i = 0; i < levels; ++i) {
    Vertex ai = fresh();
    gd.anchors[i] = ai;
    gd.y[i][0] = ai;
    gd.z[i][0] = ai;
    for (int j = 1; j <= r; ++j) gd.y[i][j] = fresh();
    for (int j = 1; j <= r; ++j) gd.z[i][j] = fresh();

    BigInt horiz = gd.M - 2 * gd.A[i];
    for (int j = 1; j <= r; ++j) {
      add(gd.y[i][j - 1], gd.y[i][j], horiz);
      add(gd.z[i][j - 1], gd.z[i][j], horiz);
    }
    for (int j = 1; j <= r; ++j) {
      if (i == 0) {
        // s_0 is all zeros: cheap y-side drop onto v_j, expensive z-side.
        add(gd.y[0][j], gd.v_endpoint[j - 1], 1);
        add(gd.z[0][j], gd.u_endpoint[j - 1], gd.A[0]);
      } else if (gd.bit(i, j)) {
        add(gd.y[i][j], gd.y[i - 1][j], gd.A[i]);
        add(gd.z[i][j], gd.z[i - 1][j], 1);
      } else {
        add(gd.y[i][j], gd.y[i - 1][j], 1);
        add(gd.z[i][j], gd.z[i - 1][j], gd.A[i]);
      }
    }
  }
  gd.n = next;
  return gd;
}

BigDistances gadget_dijkstra(const Gadget& gd, Vertex s, EdgeId skip_edge) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> out(gd.n), in(gd.n);
  for (EdgeId e = 0; e < static_cast<EdgeId>(gd.edges.size()); ++e) {
    if (e == skip_edge) continue;
    out[gd.edges[e].u].push_back({gd.edges[e].v, e});
    in[gd.edges[e].v].push_back({gd.edges[e].u, e});
  }
  BigDistances bd;
  bd.reached.assign(gd.n, 0);
  bd.dist.assign(gd.n, 0);
  bd.parent_edge.assign(gd.n, -1);

  using Item = std::pair<BigInt, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  bd.reached[s] = 1;
  pq.push({0, s});
  std::vector<char> done(gd.n, 0);
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (auto [v, e] : out[u]) {
      BigInt nd = du + gd.edges[e].w;
      if (!bd.reached[v] || nd < bd.dist[v]) {
        bd.reached[v] = 1;
        bd.dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  for (Vertex v = 0; v < gd.n; ++v) {
    if (!bd.reached[v] || v == s) continue;
    Vertex best_p = -1;
    EdgeId best_e = -1;
    for (auto [p, e] : in[v]) {
      if (!bd.reached[p] || bd.dist[p] + gd.edges[e].w != bd.dist[v]) continue;
      if (best_p == -1 || p < best_p || (p == best_p && e < best_e)) {
        best_p = p;
        best_e = e;
      }
    }
    bd.parent_edge[v] = best_e;
  }
  return bd;
}

namespace {

// Per anchor: compare the tree's X-intersection with the bit string, and
// require a unique tight predecessor at every reached e_j endpoint.
template <class AnchorSweep>
void sweep_subsets(int r, int levels, AnchorSweep&& sweep, ShatterReport& rep) {
  for (int i = 0; i < levels; ++i) {
    rep.subsets_checked++;
    auto [tree, ties] = sweep(i);
    bool ok = true;
    for (int j = 1; j <= r; ++j) {
      bool expect = (i >> (j - 1)) & 1;
      if (expect != tree[j - 1]) {
        ok = false;
        rep.failures.push_back("anchor " + std::to_string(i) + ": e_" + std::to_string(j) +
                               (expect ? " missing from" : " wrongly in") + " tree");
      }
    }
    if (ties != 0) {
      ok = false;
      rep.failures.push_back("anchor " + std::to_string(i) + ": " + std::to_string(ties) +
                             " X-relevant vertices with tied predecessors");
    }
    if (ok) rep.subsets_realized++;
  }
}

}  // namespace

ShatterReport verify_shattering(const Gadget& gd) {
  ShatterReport rep;
  int levels = 1 << gd.r;

  rep.structure_ok = true;
  BigInt prefix = 0;  // A_0 + ... + A_{i-1}
  for (int i = 0; i < levels; ++i) {
    for (int t = 0; t < i; ++t)
      if (gd.A[i] < 2 * gd.A[t] + prefix + 1) {
        rep.structure_ok = false;
        rep.failures.push_back("growth inequality fails at (i=" + std::to_string(i) +
                               ", t=" + std::to_string(t) + ")");
      }
    prefix += gd.A[i];
  }
  bool nonnegative = true;
  for (const BigEdge& e : gd.edges) {
    if (e.w < 1) {
      rep.structure_ok = false;
      if (e.w < 0) nonnegative = false;
      rep.failures.push_back("edge weight " + e.w.str() + " below 1 (M too small)");
      break;
    }
  }

  if (nonnegative) {
    std::vector<char> relevant(gd.n, 0);
    for (int j = 0; j < gd.r; ++j) relevant[gd.u_endpoint[j]] = relevant[gd.v_endpoint[j]] = 1;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> in(gd.n);
    for (EdgeId e = 0; e < static_cast<EdgeId>(gd.edges.size()); ++e)
      in[gd.edges[e].v].push_back({gd.edges[e].u, e});

    sweep_subsets(
        gd.r, levels,
        [&](int i) {
          BigDistances bd = gadget_dijkstra(gd, gd.anchors[i]);
          std::vector<char> has(gd.r, 0);
          for (Vertex v = 0; v < gd.n; ++v)
            for (int j = 0; j < gd.r; ++j)
              if (bd.parent_edge[v] == gd.X[j]) has[j] = 1;
          int ties = 0;
          for (Vertex v = 0; v < gd.n; ++v) {
            if (!relevant[v] || !bd.reached[v] || v == gd.anchors[i]) continue;
            int tight = 0;
            for (auto [p, e] : in[v])
              if (bd.reached[p] && bd.dist[p] + gd.edges[e].w == bd.dist[v]) ++tight;
            if (tight != 1) ++ties;
          }
          return std::pair<std::vector<char>, int>(std::move(has), ties);
        },
        rep);
  } else {
    rep.failures.push_back("negative edge weights; shortest-path sweep skipped");
  }

  rep.pass = rep.structure_ok && rep.subsets_checked == levels &&
             rep.subsets_realized == levels;
  return rep;
}

UnweightedGadget to_unweighted(const Gadget& gd, long long cap) {
  BigInt total = gd.n;
  for (const BigEdge& e : gd.edges) {
    if (e.w < 1) throw std::invalid_argument("to_unweighted: nonpositive edge weight");
    total += e.w - 1;
  }
  if (total > cap)
    throw std::runtime_error("to_unweighted: subdivided size " + total.str() +
                             " exceeds cap " + std::to_string(cap));
  UnweightedGadget ug;
  ug.r = gd.r;
  ug.anchors = gd.anchors;
  ug.graph = Graph(static_cast<int>(total), true);
  std::vector<EdgeId> first_edge(gd.edges.size());
  int next = gd.n;
  for (size_t e = 0; e < gd.edges.size(); ++e) {
    Vertex prev = gd.edges[e].u;
    long long w = static_cast<long long>(gd.edges[e].w);
    EdgeId first = -1;
    for (long long k = 1; k < w; ++k) {
      EdgeId id = ug.graph.add_edge(prev, next);
      if (first == -1) first = id;
      prev = next++;
    }
    EdgeId id = ug.graph.add_edge(prev, gd.edges[e].v);
    first_edge[e] = first == -1 ? id : first;
  }
  ug.X.reserve(gd.X.size());
  for (EdgeId e : gd.X) ug.X.push_back(first_edge[e]);  // weight-1 edges map to themselves
  return ug;
}

ShatterReport verify_shattering(const UnweightedGadget& ug) {
  ShatterReport rep;
  rep.structure_ok = true;
  int levels = 1 << ug.r;
  const Graph& g = ug.graph;

  std::vector<char> relevant(g.n(), 0);
  for (EdgeId e : ug.X) {
    relevant[g.edge(e).u] = 1;
    relevant[g.edge(e).v] = 1;
  }
  sweep_subsets(
      ug.r, levels,
      [&](int i) {
        std::vector<EdgeId> tree = shortest_path_tree(g, ug.anchors[i]);
        std::vector<char> has(ug.r, 0);
        for (int j = 0; j < ug.r; ++j)
          has[j] = std::binary_search(tree.begin(), tree.end(), ug.X[j]);
        DistanceRow row = sssp(g, ug.anchors[i], false);
        int ties = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
          if (!relevant[v] || !is_reachable(row.dist[v]) || v == ug.anchors[i]) continue;
          int tight = 0;
          for (const Arc& a : g.in(v))
            if (is_reachable(row.dist[a.to]) &&
                row.dist[a.to] + g.edge(a.edge).w == row.dist[v])
              ++tight;
          if (tight != 1) ++ties;
        }
        return std::pair<std::vector<char>, int>(std::move(has), ties);
      },
      rep);

  rep.pass = rep.subsets_checked == levels && rep.subsets_realized == levels;
  return rep;
}

void write_gadget_graph(const Gadget& gd, std::ostream& os) {
  os << "graph " << gd.n << " 1 1\n";
  std::vector<std::pair<std::pair<Vertex, Vertex>, const BigInt*>> es;
  es.reserve(gd.edges.size());
  for (const BigEdge& e : gd.edges) es.push_back({{e.u, e.v}, &e.w});
  std::sort(es.begin(), es.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [uv, w] : es) os << uv.first << ' ' << uv.second << ' ' << *w << '\n';
}

}  // namespace vcminor
