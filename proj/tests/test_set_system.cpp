#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "vcminor/generate.hpp"
#include "vcminor/set_system.hpp"

using namespace vcminor;

namespace {

bool contains_set(const SetFamily& f, const std::set<int>& want) {
  for (const Bitset& s : f.sets) {
    std::set<int> got;
    for (int i = 0; i < f.ground_size; ++i)
      if (s.test(i)) got.insert(i);
    if (got == want) return true;
  }
  return false;
}

// Brute-force shattering check used as the oracle for vc_dimension: try every
// subset of the ground set of the given size.
bool some_shattered_of_size(const SetFamily& f, int d) {
  std::vector<int> pick(d);
  std::function<bool(int, int)> go = [&](int at, int from) {
    if (at == d) {
      std::set<unsigned> traces;
      for (const Bitset& s : f.sets) {
        unsigned m = 0;
        for (int j = 0; j < d; ++j)
          if (s.test(pick[j])) m |= 1u << j;
        traces.insert(m);
      }
      return traces.size() == (1u << d);
    }
    for (int e = from; e < f.ground_size; ++e) {
      pick[at] = e;
      if (go(at + 1, e + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

SetFamily random_family(std::mt19937_64& rng, int ground, int count) {
  SetFamily f;
  f.ground_size = ground;
  for (int i = 0; i < count; ++i) {
    Bitset b(ground);
    for (int j = 0; j < ground; ++j)
      if (rng() & 1) b.set(j);
    f.add(b);
  }
  return f;
}

}  // namespace

TEST_CASE("ball system on P3 shatters the endpoints") {
  Graph g(3, false);  // a - c - b as 0 - 1 - 2
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  SetFamily f = ball_system(g);
  // {0,2} shattered: B(1,0) gives {}, B(0,0) gives {0}, B(2,0) gives {2}, B(1,1) gives {0,2}
  CHECK(contains_set(f, {1}));
  CHECK(contains_set(f, {0, 1}));
  CHECK(contains_set(f, {1, 2}));
  CHECK(contains_set(f, {0, 1, 2}));
  VcResult vc = vc_dimension(f);
  CHECK(vc.dimension == 2);
  // {a,b} = {0,2} is shattered: {} from B(1,0), {0} from B(0,0), {2} from
  // B(2,0), {0,2}... via B(1,1) = {0,1,2}.
  std::set<unsigned> traces;
  for (const Bitset& s : f.sets)
    traces.insert((s.test(0) ? 1u : 0u) | (s.test(2) ? 2u : 0u));
  CHECK(traces.size() == 4);
}

TEST_CASE("ball system of a single vertex") {
  Graph g(1, false);
  SetFamily f = ball_system(g);
  REQUIRE(f.size() == 1);
  CHECK(f.sets[0].count() == 1);
}

TEST_CASE("directed ball system on a 3-cycle") {
  Graph g(3, true);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  SetFamily f = ball_system(g);
  CHECK(contains_set(f, {0, 1}));     // B(0,1)
  CHECK(contains_set(f, {0, 1, 2}));  // B(0,2)
}

TEST_CASE("lp_hat on P3 matches the hand computation") {
  Graph g = make_path(3);  // a=0, b=1, c=2
  std::vector<Dist> M{-2, -1, 0, 1, 2};
  SetFamily f = lp_hat_system(g, {0, 2}, M);
  // v=0: d(0,2)-d(0,0)=2 -> only (1,2), element index 4
  CHECK(contains_set(f, {4}));
  // v=2: difference -2 -> all of {1} x M
  CHECK(contains_set(f, {0, 1, 2, 3, 4}));
  // v=1: difference 0 -> {(1,0),(1,1),(1,2)}
  CHECK(contains_set(f, {2, 3, 4}));
  CHECK(f.size() == 3);
}

TEST_CASE("lp_hat obeys Sauer-Shelah with k=4 on a grid") {
  Graph g = make_grid(4, 4);
  std::vector<Vertex> corners{0, 3, 12, 15};
  std::vector<Dist> M;
  for (Dist d = -6; d <= 6; ++d) M.push_back(d);
  SetFamily f = lp_hat_system(g, corners, M);
  SauerShelahReport rep = sauer_shelah_check(f, 4);
  CHECK(!rep.violated);
  CHECK(rep.ratio <= 1.0);
  CHECK(rep.family_size == f.size());
}

TEST_CASE("lp excludes vertices that cannot reach the base terminal") {
  Graph g(3, true);
  g.add_edge(0, 1);  // 2 reaches nothing
  g.add_edge(1, 0);
  SetFamily f = lp_hat_system(g, {0, 1}, {0, 1});
  CHECK(f.excluded == std::vector<Vertex>{2});
}

TEST_CASE("lp_hat rejects bad terminal sets") {
  Graph g = make_path(3);
  CHECK_THROWS_AS(lp_hat_system(g, {0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(lp_hat_system(g, {0, 0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(lp_hat_system(g, {0, 2}, {}), std::invalid_argument);
}

TEST_CASE("sp tree system: star and directed path") {
  Graph star(4, false);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  SetFamily f = sp_tree_system(star);
  REQUIRE(f.size() == 1);  // every root uses all three edges
  CHECK(f.sets[0].count() == 3);

  Graph p(3, true);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  SetFamily fp = sp_tree_system(p);
  CHECK(contains_set(fp, {0, 1}));  // tau(0)
  CHECK(contains_set(fp, {}));      // tau(2) reaches nothing
}

TEST_CASE("vc_dimension on hand-built families") {
  SetFamily singletons;
  singletons.ground_size = 3;
  for (int i = 0; i < 3; ++i) {
    Bitset b(3);
    b.set(i);
    singletons.add(b);
  }
  CHECK(vc_dimension(singletons).dimension == 1);

  SetFamily power;
  power.ground_size = 3;
  for (int mask = 0; mask < 8; ++mask) {
    Bitset b(3);
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) b.set(i);
    power.add(b);
  }
  VcResult vc = vc_dimension(power);
  CHECK(vc.dimension == 3);
  CHECK(!vc.reached_cap);

  CHECK(vc_dimension(SetFamily{}).dimension == -1);

  VcResult capped = vc_dimension(power, 2);
  CHECK(capped.dimension == 2);
  CHECK(capped.reached_cap);
}

TEST_CASE("vc_dimension agrees with brute force on random families") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    SetFamily f = random_family(rng, 8, 10);
    VcResult vc = vc_dimension(f);
    // brute force: largest d with a shattered d-set
    int expect = 0;
    for (int d = 1; d <= 8; ++d)
      if (some_shattered_of_size(f, d)) expect = d;
    CHECK(vc.dimension == expect);
  }
}

TEST_CASE("ball system of random planar graphs has VC at most 4") {
  for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
    Graph g = make_random_planar(30, seed);
    VcResult vc = vc_dimension(ball_system(g), 5);
    CHECK(vc.dimension <= 4);
  }
}

TEST_CASE("restrict: empty, full, and the monotonicity property") {
  std::mt19937_64 rng(9);
  SetFamily f = random_family(rng, 10, 12);

  SetFamily empty = restrict_family(f, {});
  CHECK(empty.size() == 1);
  CHECK(empty.sets[0].count() == 0);

  std::vector<int> full(10);
  for (int i = 0; i < 10; ++i) full[i] = i;
  SetFamily same = restrict_family(f, full);
  CHECK(same.size() == f.size());

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> X;
    for (int i = 0; i < 10; ++i)
      if (rng() & 1) X.push_back(i);
    SetFamily r = restrict_family(f, X);
    CHECK(vc_dimension(r).dimension <= vc_dimension(f).dimension);
  }
}

TEST_CASE("sauer_shelah_check on tight and loose families") {
  SetFamily power;
  power.ground_size = 3;
  for (int mask = 0; mask < 8; ++mask) {
    Bitset b(3);
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) b.set(i);
    power.add(b);
  }
  SauerShelahReport rep = sauer_shelah_check(power, 3);
  CHECK(rep.ratio == doctest::Approx(1.0));
  CHECK(!rep.violated);

  SetFamily singles;
  singles.ground_size = 10;
  for (int i = 0; i < 10; ++i) {
    Bitset b(10);
    b.set(i);
    singles.add(b);
  }
  SauerShelahReport r1 = sauer_shelah_check(singles, 1);
  CHECK(r1.family_size == 10);
  CHECK(r1.bound == doctest::Approx(11.0));
  CHECK(!r1.violated);

  // a power set of 4 violates the k=1 bound
  SetFamily p4;
  p4.ground_size = 4;
  for (int mask = 0; mask < 16; ++mask) {
    Bitset b(4);
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) b.set(i);
    p4.add(b);
  }
  CHECK(sauer_shelah_check(p4, 1).violated);
}

TEST_CASE("shattering is monotone: witnesses have all subsets shattered") {
  std::mt19937_64 rng(17);
  SetFamily f = random_family(rng, 9, 14);
  VcResult vc = vc_dimension(f);
  if (vc.dimension >= 2) {
    // drop each element of the witness; the rest must still be shattered
    for (size_t skip = 0; skip < vc.witness.size(); ++skip) {
      SetFamily sub = f;
      std::vector<int> Y;
      for (size_t j = 0; j < vc.witness.size(); ++j)
        if (j != skip) Y.push_back(vc.witness[j]);
      std::set<unsigned> traces;
      for (const Bitset& s : f.sets) {
        unsigned m = 0;
        for (size_t j = 0; j < Y.size(); ++j)
          if (s.test(Y[j])) m |= 1u << j;
        traces.insert(m);
      }
      CHECK(traces.size() == (1u << Y.size()));
    }
  }
}

TEST_CASE("lp (consecutive differences) builds without caps") {
  Graph g = make_grid(4, 4);
  std::vector<Dist> M{-3, -1, 0, 1, 3};
  SetFamily f = lp_system(g, {0, 5, 10, 15}, M);
  CHECK(f.size() >= 1);
  CHECK(f.ground_size == 15);
}
