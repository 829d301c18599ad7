#include "vcminor/undirected.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "vcminor/parallel.hpp"
#include "vcminor/set_system.hpp"

namespace vcminor {

namespace {

void require_undirected_pipeline_input(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("undirected pipeline: graph is directed");
  if (!g.unit_weights()) throw std::invalid_argument("undirected pipeline: unit weights required");
  if (!is_weakly_connected(g))
    throw std::invalid_argument("undirected pipeline: graph disconnected; run per component");
}

// Everything the three undirected algorithms need about one cluster.
struct ClusterWork {
  const Cluster* R = nullptr;
  std::vector<std::vector<Cell>> rows;  // [sigma pos][v] = d(s_i, v), global BFS
  std::vector<Cell> dr;                 // [lu * size + lv], BFS inside the cluster
  PatternTable table;
  std::vector<std::vector<Dist>> patterns;  // entries by id
  std::vector<int> pid;                     // per global vertex
  int size = 0;
  int b = 0;
};

std::vector<Cell> bfs_row_cells(const Graph& g, Vertex s) {
  DistanceRow r = sssp(g, s, false);
  std::vector<Cell> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = to_cell(r.dist[v]);
  return out;
}

// BFS from each cluster vertex restricted to the induced subgraph.
std::vector<Cell> in_cluster_distances(const Graph& g, const Cluster& R) {
  int sz = R.size();
  std::vector<Cell> dr(static_cast<size_t>(sz) * sz, kCellUnreachable);
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < sz; ++i) local[R.vertices[i]] = i;
  std::deque<Vertex> q;
  for (int s = 0; s < sz; ++s) {
    Cell* row = dr.data() + static_cast<size_t>(s) * sz;
    row[s] = 0;
    q.assign(1, R.vertices[s]);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      Cell du = row[local[u]];
      for (const Arc& a : g.out(u)) {
        int lt = local[a.to];
        if (lt >= 0 && row[lt] == kCellUnreachable) {
          row[lt] = du + 1;
          q.push_back(a.to);
        }
      }
    }
  }
  return dr;
}

ClusterWork build_cluster_work(const Graph& g, const Cluster& R) {
  ClusterWork w;
  w.R = &R;
  w.size = R.size();
  w.b = static_cast<int>(R.boundary_sequence.size());
  w.rows.reserve(w.b);
  for (Vertex s : R.boundary_sequence) w.rows.push_back(bfs_row_cells(g, s));
  w.dr = in_cluster_distances(g, R);
  if (w.b == 0) return w;  // single whole-graph cluster
  w.pid.resize(g.n());
  std::vector<Dist> entries(w.b);
  for (Vertex u = 0; u < g.n(); ++u) {
    Dist base = from_cell(w.rows[0][u]);
    for (int i = 0; i < w.b; ++i) entries[i] = from_cell(w.rows[i][u]) - base;
    int id = w.table.insert(entries);
    if (id == static_cast<int>(w.patterns.size())) w.patterns.push_back(entries);
    w.pid[u] = id;
  }
  return w;
}

// d(p, v) for one pattern over all cluster vertices.
void pattern_payload_row(const ClusterWork& w, const std::vector<Dist>& entries,
                         std::vector<Dist>& out) {
  out.assign(w.size, kUnreachable);
  for (int lv = 0; lv < w.size; ++lv) {
    Vertex v = w.R->vertices[lv];
    Dist best = kUnreachable;
    for (int i = 0; i < w.b; ++i)
      best = std::min(best, from_cell(w.rows[i][v]) + entries[i]);
    out[lv] = best;
  }
}

}  // namespace

std::vector<DistanceRow> boundary_distances(const Graph& g, const RDivision& div) {
  std::vector<Vertex> bs;
  for (const Cluster& c : div.clusters) bs.insert(bs.end(), c.boundary.begin(), c.boundary.end());
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<DistanceRow> rows;
  rows.reserve(bs.size());
  for (Vertex b : bs) rows.push_back(sssp(g, b, false));
  return rows;
}

EccResult eccentricities(const Graph& g, int r, int threads) {
  require_undirected_pipeline_input(g);
  RDivision div = build_r_division(g, r);
  EccResult res;
  res.ecc.assign(g.n(), 0);
  std::mutex merge;

  parallel_for(static_cast<int>(div.clusters.size()), threads, [&](int c) {
    const Cluster& R = div.clusters[c];
    ClusterWork w = build_cluster_work(g, R);
    std::vector<Dist> delta(g.n(), 0);

    if (w.b == 0) {
      // Whole graph in one cluster: plain in-cluster maxima.
      for (int lu = 0; lu < w.size; ++lu) {
        Dist best = 0;
        for (int lv = 0; lv < w.size; ++lv) {
          Cell d = w.dr[static_cast<size_t>(lu) * w.size + lv];
          if (d != kCellUnreachable) best = std::max(best, static_cast<Dist>(d));
        }
        delta[R.vertices[lu]] = best;
      }
    } else {
      // Step 2: furthest vertex per distinct pattern.
      std::vector<Dist> furthest(w.patterns.size(), 0);
      std::vector<Dist> payload;
      for (size_t p = 0; p < w.patterns.size(); ++p) {
        pattern_payload_row(w, w.patterns[p], payload);
        furthest[p] = *std::max_element(payload.begin(), payload.end());
      }
      // Step 3.
      std::vector<char> in_cluster(g.n(), 0);
      for (Vertex v : R.vertices) in_cluster[v] = 1;
      for (Vertex u = 0; u < g.n(); ++u) {
        Dist base = from_cell(w.rows[0][u]);
        if (!in_cluster[u]) {
          delta[u] = base + furthest[w.pid[u]];
        } else {
          int lu = local_index(R, u);
          Dist best = 0;
          const std::vector<Dist>& pu = w.patterns[w.pid[u]];
          for (int lv = 0; lv < w.size; ++lv) {
            Vertex v = R.vertices[lv];
            Dist route = kUnreachable;
            for (int i = 0; i < w.b; ++i)
              route = std::min(route, from_cell(w.rows[i][v]) + pu[i]);
            route += base;
            Dist dd = std::min(route, from_cell(w.dr[static_cast<size_t>(lu) * w.size + lv]));
            best = std::max(best, dd);
          }
          delta[u] = best;
        }
      }
    }

    std::lock_guard<std::mutex> lk(merge);
    for (Vertex u = 0; u < g.n(); ++u) res.ecc[u] = std::max(res.ecc[u], delta[u]);
  });

  res.diameter = g.n() ? *std::max_element(res.ecc.begin(), res.ecc.end()) : 0;
  return res;
}

Dist wiener_index(const Graph& g, int r, int threads) {
  require_undirected_pipeline_input(g);
  RDivision div = build_r_division(g, r);
  std::vector<Dist> part(div.clusters.size(), 0);

  parallel_for(static_cast<int>(div.clusters.size()), threads, [&](int c) {
    const Cluster& R = div.clusters[c];
    ClusterWork w = build_cluster_work(g, R);
    std::vector<char> is_boundary(w.size, 0);
    for (Vertex b : R.boundary) is_boundary[local_index(R, b)] = 1;
    Dist sum = 0;

    // W(boundary of R, V): global BFS rows.
    for (int i = 0; i < w.b; ++i)
      for (Vertex v = 0; v < g.n(); ++v) sum += from_cell(w.rows[i][v]);

    if (w.b == 0) {
      for (int lu = 0; lu < w.size; ++lu)
        for (int lv = 0; lv < w.size; ++lv)
          sum += from_cell(w.dr[static_cast<size_t>(lu) * w.size + lv]);
      part[c] = sum;
      return;
    }

    // W(interior, V(R)): exact global distances, min of the in-cluster BFS
    // value and the pattern route (a shortest path may leave the cluster).
    for (int lu = 0; lu < w.size; ++lu) {
      if (is_boundary[lu]) continue;
      Vertex u = R.vertices[lu];
      const std::vector<Dist>& pu = w.patterns[w.pid[u]];
      Dist base = from_cell(w.rows[0][u]);
      for (int lv = 0; lv < w.size; ++lv) {
        Vertex v = R.vertices[lv];
        Dist route = kUnreachable;
        for (int i = 0; i < w.b; ++i)
          route = std::min(route, from_cell(w.rows[i][v]) + pu[i]);
        sum += std::min(base + route, from_cell(w.dr[static_cast<size_t>(lu) * w.size + lv]));
      }
    }

    // W(interior, outside): |interior| * d(u, s0) + sum_{v in interior} d(p_u, v),
    // the inner sum precomputed once per distinct pattern.
    int interior = 0;
    for (int lv = 0; lv < w.size; ++lv) interior += !is_boundary[lv];
    std::vector<Dist> pattern_sum(w.patterns.size(), 0);
    std::vector<Dist> payload;
    for (size_t p = 0; p < w.patterns.size(); ++p) {
      pattern_payload_row(w, w.patterns[p], payload);
      Dist s = 0;
      for (int lv = 0; lv < w.size; ++lv)
        if (!is_boundary[lv]) s += payload[lv];
      pattern_sum[p] = s;
    }
    std::vector<char> in_cluster(g.n(), 0);
    for (Vertex v : R.vertices) in_cluster[v] = 1;
    for (Vertex u = 0; u < g.n(); ++u) {
      if (in_cluster[u]) continue;
      sum += static_cast<Dist>(interior) * from_cell(w.rows[0][u]) + pattern_sum[w.pid[u]];
    }
    part[c] = sum;
  });

  Dist total = 0;
  for (Dist p : part) total += p;
  return total / 2;
}

UndirectedOracle UndirectedOracle::build(const Graph& g, int r, int threads) {
  require_undirected_pipeline_input(g);
  UndirectedOracle o;
  o.n_ = g.n();
  o.r_ = r;
  o.division_ = build_r_division(g, r);
  int nc = static_cast<int>(o.division_.clusters.size());

  o.local_index_.assign(g.n(), 0);
  for (const Cluster& c : o.division_.clusters)
    for (int i = 0; i < c.size(); ++i) o.local_index_[c.vertices[i]] = i;

  for (const Cluster& c : o.division_.clusters)
    o.boundary_vertices_.insert(o.boundary_vertices_.end(), c.boundary.begin(), c.boundary.end());
  std::sort(o.boundary_vertices_.begin(), o.boundary_vertices_.end());
  o.boundary_rows_.assign(o.boundary_vertices_.size() * static_cast<size_t>(g.n()), 0);

  o.clusters_.resize(nc);
  o.rec_pid_.assign(static_cast<size_t>(nc) * g.n(), 0);
  o.rec_base_.assign(static_cast<size_t>(nc) * g.n(), kCellUnreachable);

  parallel_for(nc, threads, [&](int c) {
    const Cluster& R = o.division_.clusters[c];
    ClusterWork w = build_cluster_work(g, R);
    ClusterData& cd = o.clusters_[c];
    cd.sigma = R.boundary_sequence;
    cd.size = w.size;
    cd.patterns = w.patterns;

    // Rows land in the global D(B,V) table (each boundary vertex is owned by
    // exactly one cluster, so rows are written once).
    for (int i = 0; i < w.b; ++i) {
      auto it = std::lower_bound(o.boundary_vertices_.begin(), o.boundary_vertices_.end(),
                                 R.boundary_sequence[i]);
      size_t bi = static_cast<size_t>(it - o.boundary_vertices_.begin());
      std::copy(w.rows[i].begin(), w.rows[i].end(),
                o.boundary_rows_.begin() + bi * g.n());
    }

    cd.pat_dist.assign(w.patterns.size() * static_cast<size_t>(w.size), kCellUnreachable);
    std::vector<Dist> payload;
    for (size_t p = 0; p < w.patterns.size(); ++p) {
      pattern_payload_row(w, w.patterns[p], payload);
      for (int lv = 0; lv < w.size; ++lv)
        cd.pat_dist[p * w.size + lv] = to_cell(payload[lv]);
    }

    cd.intra.assign(static_cast<size_t>(w.size) * w.size, kCellUnreachable);
    for (int lu = 0; lu < w.size; ++lu) {
      Vertex u = R.vertices[lu];
      if (w.b == 0) {
        for (int lv = 0; lv < w.size; ++lv)
          cd.intra[static_cast<size_t>(lu) * w.size + lv] =
              w.dr[static_cast<size_t>(lu) * w.size + lv];
        continue;
      }
      Dist base = from_cell(w.rows[0][u]);
      const Cell* prow = cd.pat_dist.data() + static_cast<size_t>(w.pid[u]) * w.size;
      for (int lv = 0; lv < w.size; ++lv) {
        Dist route = base + from_cell(prow[lv]);
        Dist dd = std::min(route, from_cell(w.dr[static_cast<size_t>(lu) * w.size + lv]));
        cd.intra[static_cast<size_t>(lu) * w.size + lv] = to_cell(dd);
      }
    }

    if (w.b > 0)
      for (Vertex u = 0; u < g.n(); ++u) {
        o.rec_pid_[static_cast<size_t>(c) * g.n() + u] = w.pid[u];
        o.rec_base_[static_cast<size_t>(c) * g.n() + u] = w.rows[0][u];
      }
  });
  return o;
}

Dist UndirectedOracle::query(Vertex u, Vertex v) const {
  int cu = division_.owner[u], cv = division_.owner[v];
  if (cu == cv) {
    const ClusterData& cd = clusters_[cu];
    return from_cell(cd.intra[static_cast<size_t>(local_index_[u]) * cd.size + local_index_[v]]);
  }
  const ClusterData& cd = clusters_[cv];
  size_t rec = static_cast<size_t>(cv) * n_ + u;
  Dist base = from_cell(rec_base_[rec]);
  Cell pd = cd.pat_dist[static_cast<size_t>(rec_pid_[rec]) * cd.size + local_index_[v]];
  return dist_add(base, from_cell(pd));
}

std::size_t UndirectedOracle::space_bytes() const {
  std::size_t s = sizeof(*this);
  s += local_index_.size() * sizeof(int);
  s += boundary_vertices_.size() * sizeof(Vertex);
  s += boundary_rows_.size() * sizeof(Cell);
  s += rec_pid_.size() * sizeof(std::int32_t);
  s += rec_base_.size() * sizeof(Cell);
  for (const ClusterData& cd : clusters_) {
    s += cd.sigma.size() * sizeof(Vertex);
    for (const auto& p : cd.patterns) s += p.size() * sizeof(Dist);
    s += cd.pat_dist.size() * sizeof(Cell);
    s += cd.intra.size() * sizeof(Cell);
  }
  for (const Cluster& c : division_.clusters)
    s += (c.vertices.size() + c.boundary.size() + c.boundary_sequence.size()) * sizeof(Vertex);
  s += division_.owner.size() * sizeof(int);
  return s;
}

int UndirectedOracle::max_pattern_count() const {
  int m = 0;
  for (const ClusterData& cd : clusters_) m = std::max(m, static_cast<int>(cd.patterns.size()));
  return m;
}

TupleCompression distance_tuples(const Graph& g, const std::vector<Vertex>& S) {
  if (g.directed()) throw std::invalid_argument("distance_tuples: undirected graphs only");
  if (!is_weakly_connected(g)) throw std::invalid_argument("distance_tuples: graph disconnected");
  if (S.empty()) throw std::invalid_argument("distance_tuples: S must be nonempty");
  TupleCompression tc;
  tc.S = S;
  std::vector<DistanceRow> rows;
  rows.reserve(S.size());
  for (Vertex s : S) rows.push_back(sssp(g, s, false));

  Dist diam = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    DistanceRow r = sssp(g, v, false);
    for (Dist d : r.dist)
      if (is_reachable(d)) diam = std::max(diam, d);
  }
  tc.diameter = diam;

  PatternTable table;
  tc.tuple_id.resize(g.n());
  std::vector<Dist> tup(S.size());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (size_t i = 0; i < S.size(); ++i) tup[i] = rows[i].dist[v];
    int id = table.insert(tup);
    if (id == static_cast<int>(tc.tuples.size())) tc.tuples.push_back(tup);
    tc.tuple_id[v] = id;
  }

  long long k = static_cast<long long>(S.size());
  long double cap =
      static_cast<long double>(diam + 1) * sauer_shelah_bound((k - 1) * (2 * diam + 1), 4);
  tc.cap = static_cast<double>(cap);
  tc.within_cap = static_cast<long double>(tc.tuples.size()) <= cap;
  return tc;
}

}  // namespace vcminor
