#include "vcminor/set_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace vcminor {

std::string GroundElement::to_string() const {
  switch (kind) {
    case Kind::vertex: return "v" + std::to_string(a);
    case Kind::pair: return "(" + std::to_string(a) + "," + std::to_string(delta) + ")";
    case Kind::edge: return "e" + std::to_string(a);
  }
  return "?";
}

bool SetFamily::add(const Bitset& b, std::string label) {
  for (const Bitset& s : sets)
    if (s == b) return false;
  sets.push_back(b);
  labels.push_back(std::move(label));
  return true;
}

namespace {

// Dedup helper used by all builders; linear add() would be quadratic.
struct FamilyBuilder {
  SetFamily fam;
  std::unordered_set<Bitset, BitsetHash> seen;

  explicit FamilyBuilder(int ground) { fam.ground_size = ground; }

  void add(const Bitset& b, std::string label) {
    if (seen.insert(b).second) {
      fam.sets.push_back(b);
      fam.labels.push_back(std::move(label));
    }
  }
};

void check_terminals(const Graph& g, const std::vector<Vertex>& S, const std::vector<Dist>& M) {
  if (S.size() < 2) throw std::invalid_argument("lp system: need at least two terminals");
  if (M.empty()) throw std::invalid_argument("lp system: M must be nonempty");
  std::vector<Vertex> s = S;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("lp system: duplicate terminals");
  for (Vertex v : S)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("lp system: terminal out of range");
}

std::vector<Dist> sorted_unique(std::vector<Dist> m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

// Shared core of the two lp variants; `base_of(i)` names the subtrahend
// terminal for row i.
template <class BaseOf>
SetFamily lp_like_system(const Graph& g, const std::vector<Vertex>& S,
                         const std::vector<Dist>& M_in, BaseOf base_of) {
  check_terminals(g, S, M_in);
  std::vector<Dist> M = sorted_unique(M_in);
  int k = static_cast<int>(S.size());
  int mm = static_cast<int>(M.size());

  std::vector<DistanceRow> to_term(k);  // to_term[j].dist[v] = d(v -> s_j)
  for (int j = 0; j < k; ++j) to_term[j] = sssp(g, S[j], /*reverse=*/true);

  FamilyBuilder fb((k - 1) * mm);
  fb.fam.ground.reserve(fb.fam.ground_size);
  for (int i = 1; i < k; ++i)
    for (int t = 0; t < mm; ++t)
      fb.fam.ground.push_back({GroundElement::Kind::pair, i, M[t]});

  for (Vertex v = 0; v < g.n(); ++v) {
    if (!is_reachable(to_term[0].dist[v])) {
      fb.fam.excluded.push_back(v);
      continue;
    }
    Bitset b(fb.fam.ground_size);
    for (int i = 1; i < k; ++i) {
      Dist di = to_term[i].dist[v];
      Dist dbase = to_term[base_of(i)].dist[v];
      if (!is_reachable(di) || !is_reachable(dbase)) continue;
      Dist diff = di - dbase;
      // All Delta >= diff qualify; M is sorted.
      auto it = std::lower_bound(M.begin(), M.end(), diff);
      for (int t = static_cast<int>(it - M.begin()); t < mm; ++t)
        b.set((i - 1) * mm + t);
    }
    fb.add(b, "X(v" + std::to_string(v) + ")");
  }
  return std::move(fb.fam);
}

}  // namespace

SetFamily ball_system(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::runtime_error("ball_system: graph above exhaustive cap " + std::to_string(cap));
  FamilyBuilder fb(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    fb.fam.ground.push_back({GroundElement::Kind::vertex, v, 0});
  for (Vertex v = 0; v < g.n(); ++v) {
    DistanceRow row = sssp(g, v, false);
    std::vector<Dist> radii;
    for (Dist d : row.dist)
      if (is_reachable(d)) radii.push_back(d);
    radii = sorted_unique(std::move(radii));
    // Any other radius duplicates one of these sets.
    for (Dist r : radii) {
      Bitset b(g.n());
      for (Vertex u = 0; u < g.n(); ++u)
        if (is_reachable(row.dist[u]) && row.dist[u] <= r) b.set(u);
      fb.add(b, "B(" + std::to_string(v) + "," + std::to_string(r) + ")");
    }
  }
  return std::move(fb.fam);
}

SetFamily lp_hat_system(const Graph& g, const std::vector<Vertex>& S,
                        const std::vector<Dist>& M) {
  return lp_like_system(g, S, M, [](int) { return 0; });
}

SetFamily lp_system(const Graph& g, const std::vector<Vertex>& S,
                    const std::vector<Dist>& M) {
  return lp_like_system(g, S, M, [](int i) { return i - 1; });
}

SetFamily sp_tree_system(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::runtime_error("sp_tree_system: graph above exhaustive cap " + std::to_string(cap));
  FamilyBuilder fb(g.m());
  for (EdgeId e = 0; e < g.m(); ++e)
    fb.fam.ground.push_back({GroundElement::Kind::edge, e, 0});
  for (Vertex v = 0; v < g.n(); ++v) {
    Bitset b(g.m());
    for (EdgeId e : shortest_path_tree(g, v)) b.set(e);
    fb.add(b, "tau(" + std::to_string(v) + ")");
  }
  return std::move(fb.fam);
}

namespace {

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

bool is_shattered(const SetFamily& f, const std::vector<int>& Y) {
  int d = static_cast<int>(Y.size());
  std::vector<char> seen(static_cast<size_t>(1) << d, 0);
  int found = 0;
  for (const Bitset& s : f.sets) {
    unsigned mask = 0;
    for (int j = 0; j < d; ++j)
      if (s.test(Y[j])) mask |= 1u << j;
    if (!seen[mask]) {
      seen[mask] = 1;
      if (++found == (1 << d)) return true;
    }
  }
  return false;
}

}  // namespace

VcResult vc_dimension(const SetFamily& f, int cap) {
  // C(n, 8)-scale enumeration is past desk scale; the caps under test are <= 4.
  if (cap < 1 || cap > 7) throw std::invalid_argument("vc_dimension: cap must be in [1,7]");
  VcResult res;
  if (f.sets.empty()) {
    res.dimension = -1;
    return res;
  }

  // Level 1: singletons whose presence and absence are both realized.
  std::vector<std::vector<int>> cur;
  for (int x = 0; x < f.ground_size; ++x) {
    bool in = false, out = false;
    for (const Bitset& s : f.sets) (s.test(x) ? in : out) = true;
    if (in && out) cur.push_back({x});
  }
  if (cur.empty()) return res;  // dimension 0
  res.dimension = 1;
  res.witness = cur.front();

  for (int d = 2; d <= cap && !cur.empty(); ++d) {
    std::unordered_set<std::vector<int>, IntVecHash> prev_set(cur.begin(), cur.end());
    std::vector<std::vector<int>> next;
    for (const auto& Y : cur) {
      for (int e = Y.back() + 1; e < f.ground_size; ++e) {
        // Monotonicity prune: every (d-1)-subset must itself be shattered.
        std::vector<int> cand = Y;
        cand.push_back(e);
        bool ok = true;
        for (int skip = 0; skip < d - 1 && ok; ++skip) {
          std::vector<int> sub;
          sub.reserve(d - 1);
          for (int j = 0; j < d; ++j)
            if (j != skip) sub.push_back(cand[j]);
          ok = prev_set.count(sub) > 0;
        }
        if (ok && is_shattered(f, cand)) next.push_back(std::move(cand));
      }
    }
    if (!next.empty()) {
      res.dimension = d;
      res.witness = next.front();
    }
    cur = std::move(next);
  }
  res.reached_cap = res.dimension == cap && !cur.empty();
  return res;
}

SetFamily restrict_family(const SetFamily& f, const std::vector<int>& X) {
  std::vector<int> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int x : xs)
    if (x < 0 || x >= f.ground_size)
      throw std::invalid_argument("restrict_family: element out of ground set");
  FamilyBuilder fb(static_cast<int>(xs.size()));
  if (!f.ground.empty())
    for (int x : xs) fb.fam.ground.push_back(f.ground[x]);
  for (size_t i = 0; i < f.sets.size(); ++i) {
    Bitset b(fb.fam.ground_size);
    for (size_t j = 0; j < xs.size(); ++j)
      if (f.sets[i].test(xs[j])) b.set(static_cast<int>(j));
    fb.add(b, i < f.labels.size() ? f.labels[i] : std::string{});
  }
  return std::move(fb.fam);
}

namespace {

// Exact sum_{i<=k} C(n, i), saturating once it can no longer matter for
// comparisons against 64-bit family sizes.
constexpr unsigned __int128 kSsSaturated = static_cast<unsigned __int128>(1) << 100;

unsigned __int128 ss_bound_exact(long long n, int k) {
  if (n < 0) return 1;
  unsigned __int128 sum = 0;
  unsigned __int128 c = 1;  // C(n, 0)
  for (int i = 0; i <= k; ++i) {
    sum += c;
    if (sum >= kSsSaturated) return kSsSaturated;
    if (i >= n) break;  // higher binomials are zero
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1); the product stays integral.
    if (c >= kSsSaturated / static_cast<unsigned>(n)) return kSsSaturated;
    c = c * static_cast<unsigned __int128>(n - i) / static_cast<unsigned>(i + 1);
  }
  return sum;
}

}  // namespace

long double sauer_shelah_bound(long long n, int k) {
  unsigned __int128 b = ss_bound_exact(n, k);
  if (b >= kSsSaturated) return 1e30L;
  return static_cast<long double>(b);
}

bool sauer_shelah_holds(long long family_size, long long n, int k) {
  unsigned __int128 b = ss_bound_exact(n, k);
  return static_cast<unsigned __int128>(family_size) <= b;
}

SauerShelahReport sauer_shelah_check(const SetFamily& f, int k) {
  SauerShelahReport rep;
  rep.family_size = f.size();
  rep.ground_size = f.ground_size;
  rep.k = k;
  rep.bound = static_cast<double>(sauer_shelah_bound(f.ground_size, k));
  rep.ratio = rep.bound > 0 ? static_cast<double>(rep.family_size) / rep.bound : 0.0;
  rep.violated = !sauer_shelah_holds(rep.family_size, f.ground_size, k);
  return rep;
}

}  // namespace vcminor
