#include "vcminor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vcminor {

void write_graph(const Graph& g, std::ostream& os) {
  bool weighted = !g.unit_weights();
  os << "graph " << g.n() << ' ' << (g.directed() ? 1 : 0) << ' ' << (weighted ? 1 : 0) << '\n';
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  if (!g.directed())
    for (Edge& e : es)
      if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  for (const Edge& e : es) {
    os << e.u << ' ' << e.v;
    if (weighted) os << ' ' << e.w;
    os << '\n';
  }
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_graph: cannot open " + path);
  write_graph(g, f);
}

Graph read_graph(std::istream& is, const std::string& name) {
  auto fail = [&](int line, const std::string& what) -> void {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
  };
  std::string line;
  int lineno = 0;
  int n = -1, directed = -1, weighted = -1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "graph" || !(ss >> n >> directed >> weighted))
      fail(lineno, "expected header 'graph <n> <directed> <weighted>'");
    if (n < 0 || directed < 0 || directed > 1 || weighted < 0 || weighted > 1)
      fail(lineno, "bad header values");
    break;
  }
  if (n < 0) fail(lineno, "missing header");
  Graph g(n, directed == 1);
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    long long u, v, w = 1;
    if (!(ss >> u >> v)) fail(lineno, "expected 'u v" + std::string(weighted ? " w'" : "'"));
    if (weighted && !(ss >> w)) fail(lineno, "missing weight");
    std::string rest;
    if (ss >> rest) fail(lineno, "trailing tokens: '" + rest + "'");
    if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "vertex id out of range");
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
    } catch (const std::invalid_argument& e) {
      fail(lineno, e.what());
    }
  }
  return g;
}

Graph read_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("read_graph: cannot open " + path);
  return read_graph(f, path);
}

}  // namespace vcminor
