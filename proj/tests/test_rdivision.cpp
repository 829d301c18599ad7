#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "vcminor/generate.hpp"
#include "vcminor/rdivision.hpp"

using namespace vcminor;

namespace {

// The full invariant suite: cover, size cap, connectivity, boundary
// correctness against the definition.
void check_division(const Graph& g, const RDivision& div) {
  std::vector<int> seen(g.n(), 0);
  for (const Cluster& c : div.clusters) {
    CHECK(c.size() <= div.r);
    CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
    for (Vertex v : c.vertices) {
      CHECK(div.owner[v] == c.id);
      seen[v]++;
    }
    // boundary is exactly the set with a neighbor outside
    std::set<Vertex> inside(c.vertices.begin(), c.vertices.end());
    std::set<Vertex> expect;
    for (Vertex v : c.vertices) {
      bool out = false;
      for (const Arc& a : g.out(v)) out |= !inside.count(a.to);
      if (g.directed())
        for (const Arc& a : g.in(v)) out |= !inside.count(a.to);
      if (out) expect.insert(v);
    }
    CHECK(std::set<Vertex>(c.boundary.begin(), c.boundary.end()) == expect);
    CHECK(c.boundary_sequence == c.boundary);

    // connectivity of the induced underlying-undirected subgraph
    if (!c.vertices.empty()) {
      std::set<Vertex> visited{c.vertices[0]};
      std::vector<Vertex> stack{c.vertices[0]};
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        auto push = [&](Vertex w) {
          if (inside.count(w) && !visited.count(w)) {
            visited.insert(w);
            stack.push_back(w);
          }
        };
        for (const Arc& a : g.out(u)) push(a.to);
        if (g.directed())
          for (const Arc& a : g.in(u)) push(a.to);
      }
      CHECK(visited.size() == c.vertices.size());
    }
  }
  for (int v = 0; v < g.n(); ++v) CHECK(seen[v] == 1);
}

}  // namespace

TEST_CASE("P10 with r=3 becomes subpaths") {
  Graph g = make_path(10);
  RDivision div = build_r_division(g, 3);
  check_division(g, div);
  CHECK(div.clusters.size() >= 4);
  int internal = 0;
  for (const Cluster& c : div.clusters) {
    // each cluster is a contiguous run of ids on a path
    for (size_t i = 1; i < c.vertices.size(); ++i)
      CHECK(c.vertices[i] == c.vertices[i - 1] + 1);
    bool touches_end = c.vertices.front() == 0 || c.vertices.back() == 9;
    if (!touches_end) {
      CHECK(c.boundary_size() == 2);
      internal++;
    }
  }
  CHECK(internal >= 1);
  DivisionQuality q = division_quality(div);
  CHECK(q.max_boundary <= 2);
}

TEST_CASE("grid 10x10 with r=25 satisfies the invariant suite") {
  Graph g = make_grid(10, 10);
  RDivision div = build_r_division(g, 25);
  check_division(g, div);
}

TEST_CASE("r = n yields one cluster with empty boundary") {
  Graph g = make_grid(4, 4);
  RDivision div = build_r_division(g, 16);
  check_division(g, div);
  CHECK(div.clusters.size() == 1);
  CHECK(div.clusters[0].boundary.empty());
  CHECK(division_quality(div).boundary_sum == 0);
}

TEST_CASE("directed input divides on the underlying graph") {
  Graph d = orient_random(make_grid(6, 6), 99);
  RDivision div = build_r_division(d, 9);
  check_division(d, div);
}

TEST_CASE("disconnected input is handled per component") {
  Graph g(7, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  // vertex 6 isolated
  RDivision div = build_r_division(g, 2);
  check_division(g, div);
}

TEST_CASE("boundary sum shrinks as r grows on a grid") {
  Graph g = make_grid(20, 20);
  DivisionQuality q16 = division_quality(build_r_division(g, 16));
  DivisionQuality q64 = division_quality(build_r_division(g, 64));
  CHECK(q64.boundary_sum < q16.boundary_sum);
}

TEST_CASE("division dump matches the golden file for P10 r=3") {
  Graph g = make_path(10);
  std::ostringstream os;
  dump_division(build_r_division(g, 3), os);
  std::ifstream golden(std::string(VCMINOR_TEST_DATA) + "/p10_r3_division.golden");
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(os.str() == want.str());
}

TEST_CASE("r = 1 singleton clusters") {
  Graph g = make_cycle(5);
  RDivision div = build_r_division(g, 1);
  check_division(g, div);
  CHECK(div.clusters.size() == 5);
}
