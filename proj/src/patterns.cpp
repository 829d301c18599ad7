#include "vcminor/patterns.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace vcminor {

Pattern make_pattern(std::span<const Dist> d_u_to_boundary) {
  Pattern p;
  p.entries.reserve(d_u_to_boundary.size());
  if (d_u_to_boundary.empty()) return p;
  Dist base = d_u_to_boundary[0];
  for (Dist d : d_u_to_boundary) {
    if (!is_reachable(d) || !is_reachable(base))
      throw std::invalid_argument("make_pattern: infinite distance; finite patterns need a connected graph");
    p.entries.push_back(d - base);
  }
  return p;
}

Dist pattern_distance(const Pattern& p, std::span<const Dist> d_v_to_boundary) {
  Dist best = kUnreachable;
  for (size_t i = 0; i < p.entries.size(); ++i) {
    Dist t = dist_add(d_v_to_boundary[i], p.entries[i]);
    best = std::min(best, t);
  }
  return best;
}

InfinitePattern make_infinite_pattern(std::span<const Dist> d_u_to_boundary,
                                      int base, int cluster_size) {
  int k = static_cast<int>(d_u_to_boundary.size());
  if (base < 0 || base >= k)
    throw std::invalid_argument("make_infinite_pattern: base out of range");
  if (!is_reachable(d_u_to_boundary[base]))
    throw std::invalid_argument("make_infinite_pattern: base boundary vertex unreachable");
  InfinitePattern p;
  p.cluster_size = cluster_size;
  p.order.reserve(k);
  p.order.push_back(base);
  for (int i = 0; i < k; ++i)
    if (i != base) p.order.push_back(i);
  Dist d0 = d_u_to_boundary[base];
  Dist r = cluster_size;
  p.entries.reserve(k);
  for (int i : p.order) {
    Dist di = d_u_to_boundary[i];
    if (!is_reachable(di)) {
      p.entries.push_back(kPosInfEntry);
      continue;
    }
    Dist diff = di - d0;
    if (diff <= -r)
      p.entries.push_back(kNegInfEntry);
    else if (diff >= r)
      p.entries.push_back(kPosInfEntry);
    else
      p.entries.push_back(diff);
  }
  return p;
}

std::vector<Bitset> reach_sets(const Graph& g, const Cluster& R) {
  int sz = R.size();
  int b = static_cast<int>(R.boundary_sequence.size());
  std::vector<Bitset> reach(sz, Bitset(b));
  std::vector<char> in_cluster(g.n(), 0);
  for (Vertex v : R.vertices) in_cluster[v] = 1;
  std::vector<char> seen(g.n(), 0);
  for (int i = 0; i < b; ++i) {
    Vertex s = R.boundary_sequence[i];
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Vertex> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      reach[local_index(R, u)].set(i);
      for (const Arc& a : g.out(u))
        if (in_cluster[a.to] && !seen[a.to]) {
          seen[a.to] = 1;
          q.push_back(a.to);
        }
    }
  }
  return reach;
}

PatternDistance infinite_pattern_distance(const InfinitePattern& p,
                                          const Bitset& reach_v,
                                          std::span<const Dist> boundary_to_v) {
  for (Dist e : p.entries)
    if (e == kPosInfEntry) return {PatternDistance::Kind::undefined, 0};
  bool any = false;
  Dist best = kUnreachable;
  for (size_t j = 0; j < p.order.size(); ++j) {
    int i = p.order[j];
    if (!reach_v.test(i)) continue;
    if (p.entries[j] == kNegInfEntry) return {PatternDistance::Kind::neg_inf, 0};
    any = true;
    best = std::min(best, dist_add(boundary_to_v[i], p.entries[j]));
  }
  if (!any) return {PatternDistance::Kind::neg_inf, 0};
  return {PatternDistance::Kind::finite, best};
}

int local_index(const Cluster& R, Vertex v) {
  auto it = std::lower_bound(R.vertices.begin(), R.vertices.end(), v);
  if (it == R.vertices.end() || *it != v) return -1;
  return static_cast<int>(it - R.vertices.begin());
}

int PatternTable::child(int node, Dist step) const {
  const auto& next = nodes_[node].next;
  auto it = std::lower_bound(next.begin(), next.end(), step,
                             [](const auto& a, Dist s) { return a.first < s; });
  if (it == next.end() || it->first != step) return -1;
  return it->second;
}

int PatternTable::insert(std::span<const Dist> key) {
  int node = 0;
  for (Dist step : key) {
    int c = child(node, step);
    if (c == -1) {
      c = static_cast<int>(nodes_.size());
      auto& next = nodes_[node].next;
      next.insert(std::lower_bound(next.begin(), next.end(), step,
                                   [](const auto& a, Dist s) { return a.first < s; }),
                  {step, c});
      nodes_.emplace_back();
    }
    node = c;
  }
  if (nodes_[node].id == -1) nodes_[node].id = count_++;
  return nodes_[node].id;
}

int PatternTable::lookup(std::span<const Dist> key) const {
  int node = 0;
  for (Dist step : key) {
    node = child(node, step);
    if (node == -1) return -1;
  }
  return nodes_[node].id;
}

std::vector<Dist> trie_key(const Pattern& p) { return p.entries; }

std::vector<Dist> trie_key(const InfinitePattern& p) {
  std::vector<Dist> key;
  key.reserve(p.entries.size() + 1);
  key.push_back(p.order.empty() ? 0 : p.order[0]);
  Dist r = p.cluster_size;
  for (Dist e : p.entries) {
    if (e == kNegInfEntry)
      key.push_back(-r);
    else if (e == kPosInfEntry)
      key.push_back(r);
    else
      key.push_back(e);
  }
  return key;
}

}  // namespace vcminor
