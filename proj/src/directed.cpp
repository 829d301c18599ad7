#include "vcminor/directed.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "vcminor/parallel.hpp"

namespace vcminor {

namespace {

void require_directed_pipeline_input(const Graph& g, bool need_connected) {
  if (!g.directed()) throw std::invalid_argument("directed pipeline: graph is undirected");
  if (!g.unit_weights()) throw std::invalid_argument("directed pipeline: unit weights required");
  if (need_connected && !is_weakly_connected(g))
    throw std::invalid_argument("directed pipeline: underlying graph disconnected");
}

std::vector<Cell> bfs_cells(const Graph& g, Vertex s, bool reverse) {
  DistanceRow r = sssp(g, s, reverse);
  std::vector<Cell> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = to_cell(r.dist[v]);
  return out;
}

// Directed BFS inside the induced cluster subgraph, one row per local source.
std::vector<Cell> in_cluster_directed(const Graph& g, const Cluster& R) {
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

inline Dist cell_sum(Cell a, Cell b) {
  if (a == kCellUnreachable || b == kCellUnreachable) return kUnreachable;
  return static_cast<Dist>(a) + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Eccentricities

DirectedClusterEcc::DirectedClusterEcc(const Graph& g, const Cluster& R) : R_(&R) {
  b_ = static_cast<int>(R.boundary_sequence.size());
  fwd_.reserve(b_);
  rev_.reserve(b_);
  for (Vertex s : R.boundary_sequence) {
    fwd_.push_back(bfs_cells(g, s, false));
    rev_.push_back(bfs_cells(g, s, true));
  }
  dr_ = in_cluster_directed(g, R);
  reach_ = reach_sets(g, R);
}

// Furthest defined pattern distance over the cluster. idx[0] is the base
// position; entries are <= 0 or the -inf sentinel (maximum base condition
// rules out +inf, which is what makes the payload well defined).
Dist DirectedClusterEcc::payload_for(const std::vector<int>& idx,
                                     const std::vector<Dist>& entries) {
  int sz = R_->size();
  Dist best = kUnreachable;  // at least the base vertex lands at 0 below
  for (int lv = 0; lv < sz; ++lv) {
    Vertex v = R_->vertices[lv];
    const Bitset& rv = reach_[lv];
    Dist val = kUnreachable;
    bool neg_inf = false, any = false;
    for (size_t j = 0; j < idx.size(); ++j) {
      if (!rv.test(idx[j])) continue;
      if (entries[j] == kNegInfEntry) {
        neg_inf = true;
        break;
      }
      Cell f = fwd_[idx[j]][v];
      if (f == kCellUnreachable) continue;  // s_i reaches v in-cluster, so f is finite
      any = true;
      val = std::min(val, static_cast<Dist>(f) + entries[j]);
    }
    if (neg_inf || !any) continue;  // dominated by the base vertex, or unreachable
    best = (best == kUnreachable) ? val : std::max(best, val);
  }
  assert(best != kUnreachable && best >= 0);
  return best;
}

std::optional<Dist> DirectedClusterEcc::delta_from(Vertex u) {
  const Cluster& R = *R_;
  int sz = R.size();
  int lu = local_index(R, u);

  // Reachable boundary vertices and the maximum base.
  int t = -1;
  Cell dt = -1;
  for (int i = 0; i < b_; ++i) {
    Cell d = rev_[i][u];
    if (d != kCellUnreachable && d > dt) {
      dt = d;
      t = i;
    }
  }

  if (t == -1) {
    if (lu < 0) return std::nullopt;  // u cannot enter the cluster at all
    // u reaches no boundary vertex, so nothing it reaches ever leaves R.
    Dist best = 0;
    const Cell* row = dr_.data() + static_cast<size_t>(lu) * sz;
    for (int lv = 0; lv < sz; ++lv)
      if (row[lv] != kCellUnreachable) best = std::max(best, static_cast<Dist>(row[lv]));
    return best;
  }

  // Re-based pattern over the reachable boundary subsequence. Entries are
  // d(u -> s_i) - d(u -> s_t) <= 0, clipped to -inf below -(|R|-1).
  std::vector<int> idx{t};
  std::vector<Dist> entries{0};
  for (int i = 0; i < b_; ++i) {
    if (i == t) continue;
    Cell d = rev_[i][u];
    if (d == kCellUnreachable) continue;
    Dist diff = static_cast<Dist>(d) - dt;
    idx.push_back(i);
    entries.push_back(diff <= -sz ? kNegInfEntry : diff);
  }

  std::vector<Dist> key;
  key.reserve(2 * idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    key.push_back(idx[j]);
    key.push_back(entries[j] == kNegInfEntry ? -static_cast<Dist>(sz) : entries[j]);
  }

  if (lu < 0) {
    int id = table_.insert(key);
    if (id == static_cast<int>(payload_.size())) payload_.push_back(payload_for(idx, entries));
    return static_cast<Dist>(dt) + payload_[id];
  }

  // Home cluster: per-vertex min of the pattern route and in-cluster BFS.
  const Cell* drrow = dr_.data() + static_cast<size_t>(lu) * sz;
  Dist best = 0;
  for (int lv = 0; lv < sz; ++lv) {
    Vertex v = R.vertices[lv];
    const Bitset& rv = reach_[lv];
    Dist route = kUnreachable;
    bool neg_inf = false, any = false;
    for (size_t j = 0; j < idx.size(); ++j) {
      if (!rv.test(idx[j])) continue;
      if (entries[j] == kNegInfEntry) {
        neg_inf = true;
        break;
      }
      Cell f = fwd_[idx[j]][v];
      if (f == kCellUnreachable) continue;
      any = true;
      route = std::min(route, static_cast<Dist>(f) + entries[j]);
    }
    if (neg_inf) continue;  // d(u -> v) < d(u -> s_t), which v = s_t covers
    Dist cand = from_cell(drrow[lv]);
    if (any && route != kUnreachable) cand = std::min(cand, static_cast<Dist>(dt) + route);
    if (cand != kUnreachable) best = std::max(best, cand);
  }
  return best;
}

DirectedEccResult directed_eccentricities(const Graph& g, int r, int threads) {
  require_directed_pipeline_input(g, /*need_connected=*/false);
  RDivision div = build_r_division(g, r);
  DirectedEccResult res;
  res.ecc.assign(g.n(), 0);
  std::mutex merge;

  parallel_for(static_cast<int>(div.clusters.size()), threads, [&](int c) {
    DirectedClusterEcc ctx(g, div.clusters[c]);
    std::vector<Dist> delta(g.n(), 0);
    for (Vertex u = 0; u < g.n(); ++u)
      if (auto d = ctx.delta_from(u)) delta[u] = *d;
    std::lock_guard<std::mutex> lk(merge);
    for (Vertex u = 0; u < g.n(); ++u) res.ecc[u] = std::max(res.ecc[u], delta[u]);
  });

  res.diameter = g.n() ? *std::max_element(res.ecc.begin(), res.ecc.end()) : 0;
  res.strongly_connected = is_strongly_connected(g);
  return res;
}

// ---------------------------------------------------------------------------
// Oracle

DirectedOracle DirectedOracle::build(const Graph& g, int r, int threads) {
  require_directed_pipeline_input(g, /*need_connected=*/true);
  DirectedOracle o;
  o.n_ = g.n();
  o.r_ = r;
  o.division_ = build_r_division(g, r);
  int nc = static_cast<int>(o.division_.clusters.size());
  o.local_index_.assign(g.n(), 0);
  for (const Cluster& c : o.division_.clusters)
    for (int i = 0; i < c.size(); ++i) o.local_index_[c.vertices[i]] = i;
  o.clusters_.resize(nc);

  parallel_for(nc, threads, [&](int c) {
    const Cluster& R = o.division_.clusters[c];
    ClusterData& cd = o.clusters_[c];
    int sz = R.size();
    int b = static_cast<int>(R.boundary_sequence.size());
    cd.sigma = R.boundary_sequence;
    cd.size = sz;

    std::vector<std::vector<Cell>> fwd, rev;
    fwd.reserve(b);
    rev.reserve(b);
    for (Vertex s : R.boundary_sequence) {
      fwd.push_back(bfs_cells(g, s, false));
      rev.push_back(bfs_cells(g, s, true));
    }
    std::vector<Cell> dr = in_cluster_directed(g, R);

    // Global intra-cluster distances: a shortest path between cluster
    // vertices either stays inside or crosses the boundary twice.
    cd.intra.assign(static_cast<size_t>(sz) * sz, kCellUnreachable);
    for (int lu = 0; lu < sz; ++lu) {
      Vertex u = R.vertices[lu];
      for (int lv = 0; lv < sz; ++lv) {
        Vertex v = R.vertices[lv];
        Dist best = from_cell(dr[static_cast<size_t>(lu) * sz + lv]);
        for (int i = 0; i < b; ++i)
          best = std::min(best, cell_sum(rev[i][u], fwd[i][v]));
        cd.intra[static_cast<size_t>(lu) * sz + lv] = to_cell(best);
      }
    }

    cd.u_to_boundary.assign(static_cast<size_t>(g.n()) * b, kCellUnreachable);
    for (Vertex u = 0; u < g.n(); ++u)
      for (int i = 0; i < b; ++i) cd.u_to_boundary[static_cast<size_t>(u) * b + i] = rev[i][u];

    std::unordered_map<Bitset, int, BitsetHash> interned;
    cd.l_off.assign(g.n() + 1, 0);
    std::vector<Dist> dloc(sz);
    std::vector<int> order(sz);
    std::vector<Cell> radii;
    for (Vertex u = 0; u < g.n(); ++u) {
      cd.l_off[u + 1] = cd.l_off[u];
      if (o.division_.owner[u] == c) continue;

      radii.clear();
      for (int i = 0; i < b; ++i)
        if (rev[i][u] != kCellUnreachable) radii.push_back(rev[i][u]);
      std::sort(radii.begin(), radii.end());
      radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
      if (radii.empty()) continue;  // all of R is unreachable from u

      // d(u -> x) for x in R, through the cheapest boundary entry.
      for (int lv = 0; lv < sz; ++lv) {
        Vertex v = R.vertices[lv];
        Dist best = kUnreachable;
        for (int i = 0; i < b; ++i) best = std::min(best, cell_sum(rev[i][u], fwd[i][v]));
        dloc[lv] = best;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int x) { return dloc[a] < dloc[x]; });

      Bitset y(sz);
      size_t pos = 0;
      for (Cell rt : radii) {
        while (pos < order.size() && dloc[order[pos]] <= rt) y.set(order[pos++]);
        auto [it, fresh] = interned.try_emplace(y, static_cast<int>(cd.restrictions.size()));
        if (fresh) {
          cd.restrictions.push_back(y);
          size_t at = cd.restr_dist.size();
          cd.restr_dist.resize(at + sz, kCellUnreachable);
          for (int ly = 0; ly < sz; ++ly) {
            if (!y.test(ly)) continue;
            const Cell* row = cd.intra.data() + static_cast<size_t>(ly) * sz;
            for (int lv = 0; lv < sz; ++lv)
              cd.restr_dist[at + lv] = std::min(cd.restr_dist[at + lv], row[lv]);
          }
        }
        cd.l_radius.push_back(rt);
        cd.l_rid.push_back(it->second);
        cd.l_off[u + 1]++;
      }
    }
  });
  return o;
}

Dist DirectedOracle::query(Vertex u, Vertex v) const {
  int cu = division_.owner[u], cv = division_.owner[v];
  if (cu == cv) {
    const ClusterData& cd = clusters_[cu];
    return from_cell(cd.intra[static_cast<size_t>(local_index_[u]) * cd.size + local_index_[v]]);
  }
  const ClusterData& cd = clusters_[cv];
  int lv = local_index_[v];
  std::int64_t lo = cd.l_off[u], hi = cd.l_off[u + 1];
  if (lo == hi) return kUnreachable;
  auto member = [&](std::int64_t j) {
    return cd.restr_dist[static_cast<size_t>(cd.l_rid[j]) * cd.size + lv] == 0;
  };
  // First ball containing v; the membership predicate is monotone in j.
  std::int64_t first = hi;
  {
    std::int64_t a = lo, z = hi;
    while (a < z) {
      std::int64_t mid = (a + z) / 2;
      if (member(mid))
        z = mid;
      else
        a = mid + 1;
    }
    first = a;
  }
  if (first == lo) return cd.l_radius[lo];  // v already inside the innermost ball
  std::int64_t j = first - 1;               // v not in Y_j; in Y_{j+1} if that exists
  Cell d = cd.restr_dist[static_cast<size_t>(cd.l_rid[j]) * cd.size + lv];
  Dist via_ball = d == kCellUnreachable ? kUnreachable : static_cast<Dist>(cd.l_radius[j]) + d;
  if (first == hi) return via_ball;  // beyond every ball; Y_last always lies on the path
  // v in Y_{j+1} \ Y_j: either the path crosses Y_j at depth exactly r_j, or
  // it re-enters the cluster only at v itself, at depth exactly r_{j+1}.
  return std::min(via_ball, static_cast<Dist>(cd.l_radius[first]));
}

std::size_t DirectedOracle::space_bytes() const {
  std::size_t s = sizeof(*this);
  s += local_index_.size() * sizeof(int);
  s += division_.owner.size() * sizeof(int);
  for (const Cluster& c : division_.clusters)
    s += (c.vertices.size() + c.boundary.size() + c.boundary_sequence.size()) * sizeof(Vertex);
  for (const ClusterData& cd : clusters_) {
    s += cd.sigma.size() * sizeof(Vertex);
    s += cd.intra.size() * sizeof(Cell);
    s += cd.restr_dist.size() * sizeof(Cell);
    for (const Bitset& bs : cd.restrictions) s += (bs.width() + 63) / 64 * 8;
    s += cd.l_off.size() * sizeof(std::int64_t);
    s += cd.l_radius.size() * sizeof(Cell);
    s += cd.l_rid.size() * sizeof(std::int32_t);
    s += cd.u_to_boundary.size() * sizeof(Cell);
  }
  return s;
}

int DirectedOracle::max_restriction_count() const {
  int m = 0;
  for (const ClusterData& cd : clusters_)
    m = std::max(m, static_cast<int>(cd.restrictions.size()));
  return m;
}

}  // namespace vcminor
