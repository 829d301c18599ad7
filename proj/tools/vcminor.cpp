// Command-line front end: graph generation, distance-oracle build/query,
// diameter/eccentricity/Wiener statistics, empirical VC-dimension runs, the
// shattering gadget, and a CSV benchmark harness.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcminor/directed.hpp"
#include "vcminor/generate.hpp"
#include "vcminor/graph.hpp"
#include "vcminor/io.hpp"
#include "vcminor/lower_bound.hpp"
#include "vcminor/serialize.hpp"
#include "vcminor/set_system.hpp"
#include "vcminor/undirected.hpp"

using json = nlohmann::json;
using namespace vcminor;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Generator specs: grid:WxH, cycle:N, path:N, tree:N, planar:N.
Graph generate_spec(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--gen", "expected kind:params");
  std::string kind = spec.substr(0, colon), params = spec.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw CLI::ValidationError("--gen", "bad number '" + s + "'");
    return v;
  };
  if (kind == "grid") {
    auto x = params.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--gen", "grid wants WxH");
    return make_grid(as_int(params.substr(0, x)), as_int(params.substr(x + 1)));
  }
  if (kind == "cycle") return make_cycle(as_int(params));
  if (kind == "path") return make_path(as_int(params));
  if (kind == "tree") return make_random_tree(as_int(params), seed);
  if (kind == "planar") return make_random_planar(as_int(params), seed);
  throw CLI::ValidationError("--gen", "unknown kind '" + kind + "'");
}

struct InputOptions {
  std::string input_path;
  std::string gen_spec;
  bool orient = false;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    auto* in = app->add_option("--input", input_path, "graph file to read");
    auto* gen = app->add_option("--gen", gen_spec, "generator spec kind:params");
    in->excludes(gen);
    app->add_flag("--orient", orient, "orient each edge at random (makes a digraph)");
    app->add_option("--seed", seed, "random seed");
  }

  Graph load() const {
    if (input_path.empty() && gen_spec.empty())
      throw CLI::ValidationError("input", "need --input or --gen");
    Graph g = !input_path.empty() ? read_graph(input_path) : generate_spec(gen_spec, seed);
    if (orient) {
      if (g.directed()) throw CLI::ValidationError("--orient", "graph is already directed");
      g = orient_random(g, seed + 0x9e3779b9);
    }
    return g;
  }
};

// Named r presets; exponent rules follow the construction sections, with
// h = 5 for the planar test corpus.
int preset_r(const std::string& preset, int n, int h) {
  double x;
  if (preset == "ecc-undirected" || preset == "oracle-undirected")
    x = 2.0 / (3.0 * h - 1);
  else if (preset == "oracle-directed")
    x = 1.0 / (h - 2);
  else if (preset == "ecc-directed")
    x = 2.0 / (3.0 * h * h + 6);
  else if (preset.rfind("pow:", 0) == 0)
    x = std::stod(preset.substr(4));
  else if (preset.rfind("fixed:", 0) == 0)
    return std::max(1, std::stoi(preset.substr(6)));
  else
    throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
  return std::max(1, static_cast<int>(std::llround(std::pow(n, x))));
}

struct RParams {
  int r = 0;
  std::string preset;
  int h = 5;

  void attach(CLI::App* app) {
    app->add_option("--r", r, "cluster size bound (overrides --preset)");
    app->add_option("--preset", preset,
                    "r rule: ecc-undirected|oracle-directed|ecc-directed|pow:X|fixed:N");
    app->add_option("--minor-h", h, "excluded-minor size for parameter rules")->check(CLI::Range(4, 16));
  }

  int resolve(int n, const std::string& default_preset) const {
    if (r > 0) return std::min(r, std::max(1, n));
    return preset_r(preset.empty() ? default_preset : preset, n, h);
  }
};

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << j.dump(2) << '\n';
  }
}

json division_report(const RDivision& div) {
  DivisionQuality q = division_quality(div);
  return {{"clusters", q.cluster_count},
          {"boundary_sum", q.boundary_sum},
          {"max_boundary", q.max_boundary},
          {"max_cluster", q.max_cluster}};
}

// ---------------------------------------------------------------------- stats

int cmd_stats(const InputOptions& in, const RParams& rp, bool brute, int brute_cap,
              int threads, const std::string& out_path) {
  Graph g = in.load();
  json j;
  j["command"] = "stats";
  j["n"] = g.n();
  j["m"] = g.m();
  j["directed"] = g.directed();
  int r = rp.resolve(g.n(), g.directed() ? "ecc-directed" : "ecc-undirected");
  j["r"] = r;

  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  if (!g.directed()) {
    EccResult ecc = eccentricities(g, r, threads);
    j["diameter"] = ecc.diameter;
    j["ecc"] = ecc.ecc;
    j["wiener"] = wiener_index(g, r, threads);
    j["division"] = division_report(build_r_division(g, r));
    if (brute) {
      DistanceMatrix m = all_pairs(g, brute_cap);
      Dist wsum = 0;
      for (int u = 0; u < g.n(); ++u) {
        Dist e = 0;
        for (int v = 0; v < g.n(); ++v) {
          e = std::max(e, m.at(u, v));
          wsum += m.at(u, v);
        }
        ok &= e == ecc.ecc[u];
      }
      ok &= wsum / 2 == j["wiener"].get<Dist>();
    }
  } else {
    DirectedEccResult ecc = directed_eccentricities(g, r, threads);
    j["diameter"] = ecc.diameter;
    j["ecc"] = ecc.ecc;
    j["strongly_connected"] = ecc.strongly_connected;
    j["division"] = division_report(build_r_division(g, r));
    if (brute) {
      DistanceMatrix m = all_pairs(g, brute_cap);
      for (int u = 0; u < g.n(); ++u) {
        Dist e = 0;
        for (int v = 0; v < g.n(); ++v)
          if (is_reachable(m.at(u, v))) e = std::max(e, m.at(u, v));
        ok &= e == ecc.ecc[u];
      }
    }
  }
  j["timing_ms"] = ms_since(t0);
  if (brute) j["brute_match"] = ok;
  emit(j, out_path);
  return ok ? 0 : kExitVerificationFailure;
}

// --------------------------------------------------------------------- oracle

int cmd_oracle_build(const InputOptions& in, const RParams& rp, int threads,
                     const std::string& oracle_path, const std::string& report_path) {
  Graph g = in.load();
  int r = rp.resolve(g.n(), g.directed() ? "oracle-directed" : "oracle-undirected");
  json j;
  j["command"] = "oracle-build";
  j["n"] = g.n();
  j["directed"] = g.directed();
  j["r"] = r;
  auto t0 = std::chrono::steady_clock::now();
  if (g.directed()) {
    DirectedOracle o = DirectedOracle::build(g, r, threads);
    j["build_ms"] = ms_since(t0);
    save_oracle(o, oracle_path);
    j["space_bytes"] = o.space_bytes();
    j["max_restrictions_per_cluster"] = o.max_restriction_count();
    j["division"] = division_report(o.division());
  } else {
    UndirectedOracle o = UndirectedOracle::build(g, r, threads);
    j["build_ms"] = ms_since(t0);
    save_oracle(o, oracle_path);
    j["space_bytes"] = o.space_bytes();
    j["max_patterns_per_cluster"] = o.max_pattern_count();
    j["division"] = division_report(o.division());
  }
  j["oracle_file"] = oracle_path;
  emit(j, report_path);
  return 0;
}

int cmd_oracle_query(const std::string& oracle_path, const std::string& pairs_path,
                     const std::string& answers_path, const std::string& check_graph,
                     int brute_cap, const std::string& report_path) {
  std::ifstream pf(pairs_path);
  if (!pf) throw std::runtime_error("cannot open " + pairs_path);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  Vertex u, v;
  while (pf >> u >> v) pairs.push_back({u, v});

  bool directed = oracle_file_is_directed(oracle_path);
  UndirectedOracle uo;
  DirectedOracle dor;
  if (directed)
    dor = load_directed_oracle(oracle_path);
  else
    uo = load_undirected_oracle(oracle_path);
  auto query = [&](Vertex a, Vertex b) { return directed ? dor.query(a, b) : uo.query(a, b); };

  std::vector<Dist> answers(pairs.size());
  auto t0 = std::chrono::steady_clock::now();
  for (size_t i = 0; i < pairs.size(); ++i) answers[i] = query(pairs[i].first, pairs[i].second);
  double total_ms = ms_since(t0);

  if (!answers_path.empty()) {
    std::ofstream af(answers_path);
    if (!af) throw std::runtime_error("cannot open " + answers_path);
    for (size_t i = 0; i < pairs.size(); ++i) {
      af << pairs[i].first << ' ' << pairs[i].second << ' ';
      if (is_reachable(answers[i]))
        af << answers[i] << '\n';
      else
        af << "inf\n";
    }
  }

  json j;
  j["command"] = "oracle-query";
  j["pairs"] = pairs.size();
  j["mean_query_ns"] = pairs.empty() ? 0.0 : total_ms * 1e6 / pairs.size();
  j["space_bytes"] = directed ? dor.space_bytes() : uo.space_bytes();
  long long unreachable = 0;
  for (Dist d : answers) unreachable += !is_reachable(d);
  j["unreachable"] = unreachable;

  bool ok = true;
  if (!check_graph.empty()) {
    Graph g = read_graph(check_graph);
    DistanceMatrix m = all_pairs(g, brute_cap);
    long long bad = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
      bad += m.at(pairs[i].first, pairs[i].second) != answers[i];
    j["mismatches"] = bad;
    ok = bad == 0;
  }
  emit(j, report_path);
  return ok ? 0 : kExitVerificationFailure;
}

// ---------------------------------------------------------------------- vcdim

int cmd_vcdim(const InputOptions& in, const std::string& family, int instances, int n,
              int cap, int terminals, const std::string& out_path) {
  std::ostringstream lines;
  bool any_above_4 = false;
  for (int inst = 0; inst < instances; ++inst) {
    std::uint64_t seed = in.seed + static_cast<std::uint64_t>(inst);
    Graph g(0, false);
    if (instances == 1 && (!in.input_path.empty() || !in.gen_spec.empty())) {
      g = in.load();
    } else {
      g = make_random_planar(n, seed);
      if (in.orient || family == "dballs") g = orient_random(g, seed + 0x9e3779b9);
    }

    SetFamily f;
    if (family == "balls" || family == "dballs") {
      f = ball_system(g, std::max(64, g.n()));
    } else if (family == "lphat" || family == "lp") {
      std::mt19937_64 rng(seed * 31 + 7);
      std::vector<Vertex> S;
      while (static_cast<int>(S.size()) < std::min(terminals, g.n())) {
        Vertex s = static_cast<Vertex>(rng() % g.n());
        if (std::find(S.begin(), S.end(), s) == S.end()) S.push_back(s);
      }
      Dist diam = 0;
      for (Vertex w = 0; w < g.n(); ++w) {
        DistanceRow row = sssp(g, w);
        for (Dist d : row.dist)
          if (is_reachable(d)) diam = std::max(diam, d);
      }
      std::vector<Dist> M;
      for (Dist d = -diam; d <= diam; ++d) M.push_back(d);
      f = family == "lphat" ? lp_hat_system(g, S, M) : lp_system(g, S, M);
    } else if (family == "sptrees") {
      f = sp_tree_system(g, std::max(64, g.n()));
    } else {
      throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    }

    VcResult vc = vc_dimension(f, cap);
    SauerShelahReport ss = sauer_shelah_check(f, vc.dimension < 0 ? 0 : vc.dimension);
    json witness = json::array();
    for (int e : vc.witness)
      witness.push_back(e < static_cast<int>(f.ground.size()) ? f.ground[e].to_string()
                                                              : std::to_string(e));
    json j{{"seed", seed},
           {"n", g.n()},
           {"family", family},
           {"family_size", f.size()},
           {"ground_size", f.ground_size},
           {"vc_dimension", vc.dimension},
           {"reached_cap", vc.reached_cap},
           {"witness", witness},
           {"sauer_shelah_ratio", ss.ratio}};
    if (!f.excluded.empty()) j["excluded_vertices"] = f.excluded.size();
    lines << j.dump() << '\n';
    if (family != "lp" && family != "sptrees" && vc.dimension > 4) any_above_4 = true;
  }
  if (out_path.empty()) {
    std::cout << lines.str();
  } else {
    std::ofstream f(out_path);
    f << lines.str();
  }
  return any_above_4 ? kExitVerificationFailure : 0;
}

// ----------------------------------------------------------------- lowerbound

int cmd_lowerbound(int r, long long a0, const std::string& m_arg, bool emit_unweighted,
                   const std::string& prefix, const std::string& report_path) {
  BigInt m = 0;
  Gadget probe = build_gadget(r, a0);
  if (m_arg == "auto" || m_arg.empty())
    m = probe.M;
  else if (m_arg == "undersized")
    m = 2 * probe.A.back();
  else
    m = BigInt(m_arg);
  Gadget gd = build_gadget(r, a0, m);
  ShatterReport rep = verify_shattering(gd);

  json j;
  j["command"] = "lowerbound";
  j["r"] = r;
  j["n"] = gd.n;
  j["edges"] = gd.edges.size();
  j["M"] = gd.M.str();
  json as = json::array();
  for (const BigInt& a : gd.A) as.push_back(a.str());
  j["A"] = as;
  j["X_edge_ids"] = gd.X;
  j["anchors"] = gd.anchors;
  j["pass"] = rep.pass;
  j["structure_ok"] = rep.structure_ok;
  j["subsets_realized"] = rep.subsets_realized;
  j["subsets_checked"] = rep.subsets_checked;
  j["failures"] = rep.failures;

  if (!prefix.empty()) {
    std::ofstream gf(prefix + ".graph");
    if (!gf) throw std::runtime_error("cannot open " + prefix + ".graph");
    write_gadget_graph(gd, gf);
    if (emit_unweighted) {
      UnweightedGadget ug = to_unweighted(gd);
      write_graph(ug.graph, prefix + ".unweighted.graph");
      j["unweighted_n"] = ug.graph.n();
      j["unweighted_pass"] = verify_shattering(ug).pass;
    }
    std::ofstream mf(prefix + ".manifest.json");
    mf << j.dump(2) << '\n';
  }
  emit(j, report_path);
  return rep.pass ? 0 : kExitVerificationFailure;
}

// ---------------------------------------------------------------------- bench

int cmd_bench(const std::vector<int>& sizes, const std::string& r_rule, int h,
              std::uint64_t seed, const std::string& modes, int threads,
              const std::string& out_path) {
  std::ostringstream csv;
  csv << "kind,n,r,build_ms,query_ns,space_bytes,pattern_count,boundary_sum\n";
  bool cap_ok = true;
  bool run_undirected = false, run_directed = false;
  std::istringstream ms(modes);
  for (std::string mode; std::getline(ms, mode, ',');) {
    if (mode == "undirected")
      run_undirected = true;
    else if (mode == "directed")
      run_directed = true;
    else
      throw CLI::ValidationError("--modes", "unknown mode '" + mode + "'");
  }

  for (int n : sizes) {
    Graph base = make_random_planar(n, seed + static_cast<std::uint64_t>(n));
    int r = preset_r(r_rule, n, h);
    std::mt19937_64 rng(seed ^ 0xabcdef);

    if (run_undirected) {
      auto t0 = std::chrono::steady_clock::now();
      UndirectedOracle o = UndirectedOracle::build(base, r, threads);
      double build_ms = ms_since(t0);
      auto q0 = std::chrono::steady_clock::now();
      int reps = 100000;
      Dist sink = 0;
      for (int k = 0; k < reps; ++k)
        sink ^= o.query(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
      double query_ns = ms_since(q0) * 1e6 / reps;
      for (size_t c = 0; c < o.clusters_.size(); ++c) {
        const Cluster& R = o.division_.clusters[c];
        if (R.boundary_size() == 0) continue;
        long long ground = static_cast<long long>(R.boundary_size()) * (2 * R.size() - 1);
        cap_ok &= sauer_shelah_holds(o.pattern_count(static_cast<int>(c)), ground, 4);
      }
      csv << "undirected," << n << ',' << r << ',' << build_ms << ',' << query_ns << ','
          << o.space_bytes() << ',' << o.max_pattern_count() << ','
          << division_quality(o.division()).boundary_sum << '\n';
      (void)sink;
    }
    if (run_directed) {
      Graph dg = orient_random(base, seed * 3 + 1);
      auto t0 = std::chrono::steady_clock::now();
      DirectedOracle o = DirectedOracle::build(dg, r, threads);
      double build_ms = ms_since(t0);
      auto q0 = std::chrono::steady_clock::now();
      int reps = 100000;
      Dist sink = 0;
      for (int k = 0; k < reps; ++k) {
        Dist d = o.query(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
        sink ^= is_reachable(d) ? d : -1;
      }
      double query_ns = ms_since(q0) * 1e6 / reps;
      for (const auto& cd : o.clusters_)
        cap_ok &= sauer_shelah_holds(static_cast<long long>(cd.restrictions.size()), cd.size, 4);
      csv << "directed," << n << ',' << r << ',' << build_ms << ',' << query_ns << ','
          << o.space_bytes() << ',' << o.max_restriction_count() << ','
          << division_quality(o.division()).boundary_sum << '\n';
      (void)sink;
    }
  }

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path);
    f << csv.str();
  }
  if (!cap_ok) {
    std::cerr << "bench: a pattern/restriction count exceeded its Sauer-Shelah cap\n";
    return kExitVerificationFailure;
  }
  return 0;
}

// ------------------------------------------------------------------------ gen

int cmd_gen(const std::string& kind, int w, int h, int n, std::uint64_t seed,
            const std::string& input, double delete_fraction, const std::string& out) {
  Graph g(0, false);
  if (kind == "grid")
    g = make_grid(w, h);
  else if (kind == "cycle")
    g = make_cycle(n);
  else if (kind == "path")
    g = make_path(n);
  else if (kind == "tree")
    g = make_random_tree(n, seed);
  else if (kind == "planar")
    g = make_random_planar(n, seed, delete_fraction);
  else if (kind == "orient")
    g = orient_random(read_graph(input), seed);
  else if (kind == "subdivide")
    g = subdivide(read_graph(input));
  else
    throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
  write_graph(g, out);
  std::cout << json{{"command", "gen"}, {"kind", kind}, {"n", g.n()}, {"m", g.m()},
                    {"directed", g.directed()}, {"file", out}}
                   .dump(2)
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VC-set-system distance algorithms for minor-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for build phases");

  auto* stats = app.add_subcommand("stats", "eccentricities, diameter, Wiener index");
  stats->fallthrough();
  InputOptions stats_in;
  RParams stats_r;
  stats_in.attach(stats);
  stats_r.attach(stats);
  bool stats_brute = false;
  int stats_brute_cap = 5000;
  std::string stats_out;
  stats->add_flag("--brute", stats_brute, "cross-check against all-pairs BFS");
  stats->add_option("--brute-cap", stats_brute_cap, "vertex cap for --brute");
  stats->add_option("-o,--output", stats_out, "write JSON here instead of stdout");

  auto* ob = app.add_subcommand("oracle-build", "build and serialize a distance oracle");
  ob->fallthrough();
  InputOptions ob_in;
  RParams ob_r;
  ob_in.attach(ob);
  ob_r.attach(ob);
  std::string ob_oracle, ob_report;
  ob->add_option("--oracle", ob_oracle, "output oracle file")->required();
  ob->add_option("-o,--output", ob_report, "write the JSON report here");

  auto* oq = app.add_subcommand("oracle-query", "answer a batch of pairs from an oracle file");
  oq->fallthrough();
  std::string oq_oracle, oq_pairs, oq_answers, oq_check, oq_report;
  int oq_brute_cap = 5000;
  oq->add_option("--oracle", oq_oracle, "oracle file")->required();
  oq->add_option("--pairs", oq_pairs, "file of 'u v' lines")->required();
  oq->add_option("--answers", oq_answers, "write 'u v d' lines here");
  oq->add_option("--check", oq_check, "graph file; verify answers against all-pairs");
  oq->add_option("--brute-cap", oq_brute_cap, "vertex cap for --check");
  oq->add_option("-o,--output", oq_report, "write the JSON report here");

  auto* vc = app.add_subcommand("vcdim", "empirical VC dimension of a set system");
  vc->fallthrough();
  InputOptions vc_in;
  vc_in.attach(vc);
  std::string vc_family = "balls", vc_out;
  int vc_instances = 1, vc_n = 30, vc_cap = 7, vc_terminals = 4;
  vc->add_option("--family", vc_family, "balls|dballs|lphat|lp|sptrees")->required();
  vc->add_option("--instances", vc_instances, "number of seeded planar instances");
  vc->add_option("--n", vc_n, "instance size for batch mode");
  vc->add_option("--cap", vc_cap, "search depth cap")->check(CLI::Range(1, 7));
  vc->add_option("--terminals", vc_terminals, "terminal count for lp systems");
  vc->add_option("-o,--output", vc_out, "write JSON lines here");

  auto* lb = app.add_subcommand("lowerbound", "build and verify the shattering gadget");
  lb->fallthrough();
  int lb_r = 3;
  long long lb_a0 = 2;
  std::string lb_m = "auto", lb_prefix, lb_report;
  bool lb_unweighted = false;
  lb->add_option("--r", lb_r, "number of shattered edges")->check(CLI::Range(1, 12));
  lb->add_option("--a0", lb_a0, "base growth constant");
  lb->add_option("--m", lb_m, "auto | undersized | explicit integer");
  lb->add_flag("--emit-unweighted", lb_unweighted, "also write the unit-subdivided digraph");
  lb->add_option("--out-prefix", lb_prefix, "write <prefix>.graph and <prefix>.manifest.json");
  lb->add_option("-o,--output", lb_report, "write the JSON report here");

  auto* be = app.add_subcommand("bench", "CSV scaling benchmark");
  be->fallthrough();
  std::vector<int> be_sizes{200, 400};
  std::string be_rule = "pow:0.66", be_modes = "undirected,directed", be_out;
  int be_h = 5;
  std::uint64_t be_seed = 1;
  be->add_option("--sizes", be_sizes, "graph sizes")->delimiter(',');
  be->add_option("--r-rule", be_rule, "preset name, pow:X, or fixed:N");
  be->add_option("--minor-h", be_h, "excluded-minor size for parameter rules");
  be->add_option("--seed", be_seed, "random seed");
  be->add_option("--modes", be_modes, "undirected,directed");
  be->add_option("-o,--output", be_out, "write CSV here instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->fallthrough();
  std::string gen_kind, gen_input, gen_out;
  int gen_w = 4, gen_h = 4, gen_n = 16;
  std::uint64_t gen_seed = 1;
  double gen_del = 0.25;
  gen->add_option("--kind", gen_kind, "grid|cycle|path|tree|planar|orient|subdivide")->required();
  gen->add_option("--w", gen_w, "grid width");
  gen->add_option("--gh,--height", gen_h, "grid height");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--input", gen_input, "input graph for orient/subdivide");
  gen->add_option("--delete-fraction", gen_del, "edge deletion fraction for planar");
  gen->add_option("-o,--output", gen_out, "output graph file")->required();

  try {
    app.parse(argc, argv);
    if (stats->parsed())
      return cmd_stats(stats_in, stats_r, stats_brute, stats_brute_cap, threads, stats_out);
    if (ob->parsed()) return cmd_oracle_build(ob_in, ob_r, threads, ob_oracle, ob_report);
    if (oq->parsed())
      return cmd_oracle_query(oq_oracle, oq_pairs, oq_answers, oq_check, oq_brute_cap, oq_report);
    if (vc->parsed())
      return cmd_vcdim(vc_in, vc_family, vc_instances, vc_n, vc_cap, vc_terminals, vc_out);
    if (lb->parsed())
      return cmd_lowerbound(lb_r, lb_a0, lb_m, lb_unweighted, lb_prefix, lb_report);
    if (be->parsed()) return cmd_bench(be_sizes, be_rule, be_h, be_seed, be_modes, threads, be_out);
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_w, gen_h, gen_n, gen_seed, gen_input, gen_del, gen_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
