// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
//   acceptance                      run every criterion
//   acceptance --only 3,7           run a subset
//   acceptance --write-baseline F   regenerate the frozen size-ratio baseline

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsketch/canonical.hpp"
#include "gsketch/clustering.hpp"
#include "gsketch/instances.hpp"
#include "gsketch/preserver.hpp"
#include "gsketch/spanner.hpp"
#include "gsketch/sweep.hpp"
#include "gsketch/tiebreak.hpp"
#include "gsketch/verify.hpp"
#include "oracles.hpp"

using namespace gsketch;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void fail(const std::string& why) {
    if (out_.pass) out_.detail = why;
    out_.pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  Outcome& outcome() { return out_; }

 private:
  Outcome out_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(std::size_t x) { return std::to_string(x); }

// ---------------------------------------------------------------------------
// 1. Layered lower-bound instances.
Outcome lower_bound_exactness() {
  Check c;
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    const auto inst = layered_graph(q, q);
    const auto audit = audit_layered(inst);
    c.expect(audit.edge_disjoint, "q=" + str(q) + " scheme paths share an edge");
    c.expect(audit.pairwise_node_overlap_max <= 1, "q=" + str(q) + " node overlap " + str(audit.pairwise_node_overlap_max));
    const auto pres = naive_preserver(inst.graph, inst.pairs, inst.scheme());
    const std::size_t want = inst.pairs.size() * (q - 1);
    c.expect(pres.h.edge_count() == want, "q=" + str(q) + " |H|=" + str(pres.h.edge_count()) + " want " + str(want));
    c.expect(verify(inst.graph, pres.h, inst.pairs, 0.0, 1).ok(), "q=" + str(q) + " preserver not exact");
  }
  if (c.outcome().pass) c.outcome().detail = "q in {3,5,7,11}: |H| = |P|(q-1), edge-disjoint, overlap <= 1";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 2 and 4 share their random preserver instances.
struct PreserverCase {
  Graph g;
  PairSet pairs;
};

std::vector<PreserverCase> preserver_cases() {
  std::vector<PreserverCase> out;
  Rng rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 16 + rng.uniform_below(512 - 16 + 1);
    const std::size_t max_m = std::min<std::size_t>(n * (n - 1) / 2, 6 * n);
    const std::size_t m = n + rng.uniform_below(max_m - n + 1);
    auto g = random_graph(n, m, rng.next());
    const std::size_t k = std::min<std::uint64_t>(1 + rng.uniform_below(200), connected_pair_count(g));
    auto pairs = random_pairs(g, k, rng.next());
    out.push_back({std::move(g), std::move(pairs)});
  }
  return out;
}

// Exactness against an independent BFS over plain adjacency lists.
std::size_t oracle_violations(const Graph& g, const Subgraph& h, const PairSet& pairs) {
  const auto ag = oracle::adjacency(g.node_count(), oracle::edges_of(g));
  const auto ah = oracle::adjacency(g.node_count(), h.edge_list());
  std::map<NodeId, std::vector<NodePair>> by_source;
  for (const auto& p : pairs) by_source[p.first].push_back(p);
  std::size_t bad = 0;
  for (const auto& [s, list] : by_source) {
    const auto dg = oracle::bfs(ag, s);
    const auto dh = oracle::bfs(ah, s);
    for (const auto& [u, v] : list)
      if (dg[v] != dh[v]) ++bad;
  }
  return bad;
}

Outcome preserver_exactness(const std::vector<PreserverCase>& cases, std::vector<OrientedPathSystem>& systems,
                            std::vector<const Graph*>& hosts) {
  Check c;
  std::size_t demands = 0, fired = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [g, pairs] = cases[i];
    auto naive = naive_preserver(g, pairs);
    auto fresh = new_preserver(g, pairs, PreserverParams{});
    for (const auto* p : {&naive, &fresh}) {
      const auto rep = verify(g, p->h, pairs, 0.0, 1);
      const auto bad = oracle_violations(g, p->h, pairs);
      c.expect(rep.ok() && bad == 0, "instance " + str(i) + ": " + str(rep.violations.size()) + " violations (oracle " +
                                         str(bad) + ")");
      demands += pairs.size();
    }
    fired += fresh.auxiliaries.size();
    systems.push_back(std::move(naive.system));
    hosts.push_back(&g);
    systems.push_back(std::move(fresh.system));
    hosts.push_back(&g);
    for (auto& aux : fresh.auxiliaries) {
      systems.push_back(std::move(aux.system));
      hosts.push_back(&g);
    }
  }
  if (c.outcome().pass)
    c.outcome().detail = "100 instances x {naive,new}, " + str(demands) + " demands, 0 violations (" + str(fired) +
                         " auxiliary preservers)";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 3. Choke preserver audits.
struct ChokeCase {
  Graph g;
  ChokeInput input;
};

std::vector<ChokeCase> choke_cases() {
  std::vector<ChokeCase> out;
  Rng rng(77);
  for (int i = 0; i < 25; ++i) {
    Graph g = i % 2 == 0 ? grid_graph(8 + rng.uniform_below(8), 8 + rng.uniform_below(8))
                         : random_graph(100 + rng.uniform_below(150), 260 + rng.uniform_below(200), rng.next());
    const auto n = g.node_count();
    const auto center = static_cast<NodeId>(rng.uniform_below(n));
    const auto radius = static_cast<Dist>(1 + rng.uniform_below(2));
    ChokeInput in;
    in.s_nodes = ball(g, center, radius, BallMode::at_most);
    in.diameter_bound = 2 * radius;
    // Pairs whose shortest path can pass through S.
    std::vector<std::vector<Dist>> ds;
    for (NodeId s : in.s_nodes) ds.push_back(bfs_distances(g, s));
    std::vector<NodePair> raw;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (int tries = 0; raw.size() < 80 && tries < 20000; ++tries) {
      const auto a = static_cast<NodeId>(rng.uniform_below(n));
      const auto b = static_cast<NodeId>(rng.uniform_below(n));
      if (a == b || !seen.insert(std::minmax(a, b)).second) continue;
      const auto dab = bfs_distances(g, a)[b];
      if (!reachable(dab)) continue;
      bool through = false;
      for (const auto& d : ds)
        if (reachable(d[a]) && reachable(d[b]) && d[a] + d[b] == dab) through = true;
      if (through) raw.emplace_back(a, b);
    }
    in.pairs = PairSet(n, raw);
    out.push_back({std::move(g), std::move(in)});
  }
  return out;
}

// Entry counting straight from the definition: owners in ascending id; an
// entry of owner u on path p is the first node of a u-path lying on p.
std::size_t max_entries(const OrientedPathSystem& sys) {
  std::size_t worst = 0;
  for (const auto& p : sys.paths) {
    const std::set<NodeId> on_p(p.path.nodes.begin(), p.path.nodes.end());
    std::map<NodeId, std::set<NodeId>> entries;
    for (const auto& q : sys.paths) {
      if (*q.owner <= *p.owner) continue;
      for (NodeId x : q.path.nodes)
        if (on_p.count(x)) {
          entries[*q.owner].insert(x);
          break;
        }
    }
    for (const auto& [u, e] : entries) worst = std::max(worst, e.size());
  }
  return worst;
}

Outcome choke_invariants(std::vector<OrientedPathSystem>& systems, std::vector<const Graph*>& hosts,
                         std::vector<ChokeCase>& cases) {
  Check c;
  std::size_t paths = 0, reroutes = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& cc = cases[i];
    auto sys = choke_preserver(cc.g, cc.input);
    const auto adj = oracle::adjacency(cc.g.node_count(), oracle::edges_of(cc.g));
    for (const auto& op : sys.paths) {
      bool valid = !op.path.empty() && op.owner && op.path.front() == *op.owner;
      for (std::size_t k = 0; valid && k + 1 < op.path.nodes.size(); ++k) valid = cc.g.has_edge(op.path.nodes[k], op.path.nodes[k + 1]);
      valid = valid && static_cast<int>(op.path.length()) == oracle::bfs(adj, op.path.front())[op.path.back()];
      c.expect(valid, "instance " + str(i) + ": a path is not shortest");
    }
    const std::size_t limit = 2 * static_cast<std::size_t>(cc.input.diameter_bound) + 1;
    const auto worst = max_entries(sys);
    c.expect(worst <= limit, "instance " + str(i) + ": " + str(worst) + " entries > " + str(limit));
    const auto audit = audit_choke(cc.g, sys, cc.input.diameter_bound);
    c.expect(audit.all_shortest && audit.violations == 0, "instance " + str(i) + ": library audit disagrees");
    paths += sys.size();
    reroutes += sys.reroutes;
    systems.push_back(std::move(sys));
    hosts.push_back(&cc.g);
  }
  if (c.outcome().pass)
    c.outcome().detail = "25 instances, " + str(paths) + " paths shortest, entries <= 2d+1 (" + str(reroutes) + " reroutes)";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 4. Branching-to-size inequality on every constructed path system.
std::size_t branching_oracle(const OrientedPathSystem& sys) {
  std::map<std::pair<NodeId, NodeId>, NodeId> head;  // edge -> head of first orientation
  std::set<std::pair<NodeId, NodeId>> reversed;
  std::map<NodeId, std::size_t> indeg;
  for (const auto& op : sys.paths) {
    const auto& n = op.path.nodes;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      const auto key = std::minmax(n[i], n[i + 1]);
      const auto it = head.find(key);
      if (it == head.end()) {
        head.emplace(key, n[i + 1]);
        ++indeg[n[i + 1]];
      } else if (it->second != n[i + 1] && reversed.insert(key).second) {
        ++indeg[n[i + 1]];
      }
    }
  }
  std::size_t b = 0;
  for (const auto& [v, d] : indeg) b += d * (d - 1) / 2;
  return b;
}

Outcome branch_inequality(const std::vector<OrientedPathSystem>& systems, const std::vector<const Graph*>& hosts) {
  Check c;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const Graph& g = *hosts[i];
    std::set<Edge> edges;
    for (const auto& op : systems[i].paths)
      for (std::size_t k = 0; k + 1 < op.path.nodes.size(); ++k) edges.insert(normalized(op.path.nodes[k], op.path.nodes[k + 1]));
    const std::uint64_t m = edges.size(), n = g.node_count(), b = branching_oracle(systems[i]);
    // m <= n + ceil(sqrt(2bn)) in integers: m <= n or (m - n - 1)^2 < 2bn.
    const bool holds = m <= n || (m - n - 1) * (m - n - 1) < 2 * b * n;
    c.expect(holds, "system " + str(i) + ": m=" + str(m) + " n=" + str(n) + " b=" + str(b));
    const auto rep = check_branch_size_bound(g, systems[i]);
    c.expect(rep.m == m && rep.b == b && rep.holds == holds, "system " + str(i) + ": library report disagrees");
  }
  if (c.outcome().pass) c.outcome().detail = str(systems.size()) + " path systems satisfy m <= n + ceil(sqrt(2bn))";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 5. Clustering invariants.
Outcome clustering_invariants() {
  Check c;
  std::size_t runs = 0;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("path", path_graph(n));
    graphs.emplace_back("grid", grid_graph(side, side));
    graphs.emplace_back("random", random_graph(n, 2 * n, n));
    for (const auto& [name, g] : graphs) {
      const auto adj = oracle::adjacency(n, oracle::edges_of(g));
      const double lg = std::ceil(std::log2(static_cast<double>(n)));
      const double loglog = std::log2(std::log2(static_cast<double>(n)));
      const double cap_exp = std::ceil(std::log2(static_cast<double>(n)) / loglog);
      for (Dist r : {1, 2, 4}) {
        ++runs;
        const std::string where = name + " n=" + str(n) + " r=" + std::to_string(r);
        const auto cl = build_clustering(g, r);
        std::vector<bool> covered(n, false);
        double total = 0;
        std::vector<std::vector<int>> dist;
        for (std::size_t i = 0; i < cl.size(); ++i) {
          dist.push_back(oracle::bfs(adj, cl.centers[i]));
          const Dist ri = cl.radii[i];
          c.expect(ri >= r && static_cast<double>(ri) <= r * std::pow(4.0, cap_exp), where + ": radius out of range");
          std::size_t xs = 0;
          for (NodeId v = 0; v < n; ++v) {
            if (dist[i][v] <= ri) covered[v] = true;
            if (dist[i][v] <= 2 * ri) ++xs;
          }
          c.expect(xs == cl.clusters[i].size(), where + ": cluster table mismatch");
          total += static_cast<double>(xs);
        }
        for (NodeId v = 0; v < n; ++v) c.expect(covered[v], where + ": node " + str(v) + " uncovered");
        c.expect(total <= static_cast<double>(n) * lg + static_cast<double>(n), where + ": sum |X_i| too large");
        for (std::size_t i = 0; i < cl.size(); ++i)
          for (std::size_t j = i + 1; j < cl.size(); ++j)
            c.expect(dist[i][cl.centers[j]] > cl.radii[i] / 2 + cl.radii[j] / 2, where + ": half-radius balls meet");
      }
    }
  }
  if (c.outcome().pass) c.outcome().detail = str(runs) + " clusterings: coverage, radius range, sum |X_i|, disjointness";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 6. Path decomposition.
Outcome path_decomposition() {
  Check c;
  Rng rng(6);
  std::size_t subpaths = 0, large_used = 0, small_used = 0;
  const std::array<std::pair<std::size_t, Dist>, 4> setups{{{20, 1}, {24, 2}, {30, 1}, {16, 2}}};
  for (std::size_t t = 0; t < 200; ++t) {
    const auto [side, r] = setups[t % setups.size()];
    const auto g = grid_graph(side, side);
    const auto cl = build_clustering(g, r);
    // Alternate between every cluster large and a random mix of labels.
    std::vector<ClusterLabel> labels(cl.size(), ClusterLabel::large);
    if (t % 2)
      for (auto& l : labels) l = rng.uniform_below(2) ? ClusterLabel::small : ClusterLabel::large;
    const auto u = static_cast<NodeId>(rng.uniform_below(side * side));
    const auto v = static_cast<NodeId>(rng.uniform_below(side * side));
    const auto path = canonical_shortest_path(g, u, v);
    try {
      const auto dec = decompose_path(g, path, cl, labels);
      std::vector<NodeId> joined;
      std::set<std::uint32_t> seen;
      for (const auto& sp : dec.subpaths) {
        const auto& nodes = sp.path.nodes;
        joined.insert(joined.end(), nodes.begin() + (joined.empty() ? 0 : 1), nodes.end());
        if (labels[sp.cluster] == ClusterLabel::large) {
          c.expect(seen.insert(sp.cluster).second, "path " + str(t) + ": large cluster repeated");
          ++large_used;
        } else {
          ++small_used;
        }
        ++subpaths;
      }
      c.expect(joined == path.nodes, "path " + str(t) + ": concatenation differs");
    } catch (const std::exception& e) {
      c.fail("path " + str(t) + ": " + e.what());
    }
  }
  if (c.outcome().pass)
    c.outcome().detail = "200 grid paths, " + str(subpaths) + " subpaths, " + str(large_used) + " large and " + str(small_used) +
                         " small subpaths, no repeated large cluster";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 7. Spanner error certificates.
Outcome spanner_certificates() {
  Check c;
  std::size_t instances = 0;
  double worst_subset = 0, worst_standard = 0;
  for (double d : {0.2, 0.3, 0.5}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed * 1000 + static_cast<std::uint64_t>(d * 10));
      const std::size_t n = 100 + rng.uniform_below(413);
      const bool grid = seed % 4 == 3;
      const std::size_t w = grid ? 8 + rng.uniform_below(15) : 0;
      const auto g = grid ? grid_graph(w, n / w) : random_graph(n, n + rng.uniform_below(3 * n), rng.next());
      const std::size_t nn = g.node_count();
      const auto adj_g = oracle::adjacency(nn, oracle::edges_of(g));
      const double nd = std::pow(static_cast<double>(nn), d);
      const std::string where = "d=" + format_number(d) + " seed=" + str(seed);

      const auto s = random_subset(nn, 5 + rng.uniform_below(30), rng.next());
      const auto sub = subset_spanner(g, s, d);
      const auto adj_s = oracle::adjacency(nn, sub.h.edge_list());
      for (NodeId a : s) {
        const auto dg = oracle::bfs(adj_g, a);
        const auto dh = oracle::bfs(adj_s, a);
        for (NodeId b : s) {
          if (dg[b] == oracle::kInf) continue;
          const double err = dh[b] == oracle::kInf ? INFINITY : dh[b] - dg[b];
          worst_subset = std::max(worst_subset, err);
          c.expect(err <= std::ceil(nd), where + ": subset error " + format_number(err));
        }
      }

      StandardParams sp;
      sp.d = d;
      sp.seed = rng.next();
      const auto std_h = standard_spanner(g, sp);
      const auto adj_h = oracle::adjacency(nn, std_h.h.edge_list());
      for (NodeId a = 0; a < nn; ++a) {
        const auto dg = oracle::bfs(adj_g, a);
        const auto dh = oracle::bfs(adj_h, a);
        for (NodeId b = a + 1; b < nn; ++b) {
          if (dg[b] == oracle::kInf) continue;
          const double err = dh[b] == oracle::kInf ? INFINITY : dh[b] - dg[b];
          worst_standard = std::max(worst_standard, err / nd);
          c.expect(err <= 8.0 * nd, where + ": standard error " + format_number(err));
        }
      }
      ++instances;
    }
  }
  if (c.outcome().pass)
    c.outcome().detail = str(instances) + " instances; worst subset error " + format_number(worst_subset) +
                         ", worst standard error " + format_number(worst_standard) + " n^d";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 8. Size-ratio regression against frozen-seed baselines.
std::vector<SweepSpec> baseline_specs() {
  std::vector<SweepSpec> specs;
  SweepSpec layered;
  layered.family = Family::layered;
  layered.sizes = {5, 7, 11};
  layered.params = {0};
  layered.algos = {SweepAlgo::naive, SweepAlgo::fresh};
  layered.seed = 1;
  specs.push_back(layered);

  SweepSpec pres;
  pres.family = Family::random;
  pres.sizes = {200, 400};
  pres.params = {100, 400};
  pres.algos = {SweepAlgo::naive, SweepAlgo::fresh};
  pres.seed = 1;
  pres.seeds = 3;
  specs.push_back(pres);

  SweepSpec span;
  span.family = Family::random;
  span.sizes = {200, 400};
  span.params = {0.2, 0.3, 0.5};
  span.algos = {SweepAlgo::subset, SweepAlgo::standard};
  span.seed = 1;
  span.seeds = 3;
  specs.push_back(span);

  SweepSpec grid = span;
  grid.family = Family::grid;
  grid.sizes = {12, 20};
  specs.push_back(grid);
  for (auto& s : specs) s.consts = Constants{};
  return specs;
}

std::vector<SweepRow> baseline_rows() {
  std::vector<SweepRow> rows;
  for (const auto& spec : baseline_specs()) {
    auto part = run_sweep(spec);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

// Mean ratio per instance family (family, algo, size, param) over seeds.
std::map<std::string, double> mean_ratios(const std::vector<SweepRow>& rows) {
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& r : rows) {
    const auto key = r.family + "/" + r.algo + "/" + str(r.size) + "/" + format_number(r.param);
    acc[key].first += r.ratio;
    acc[key].second += 1;
  }
  std::map<std::string, double> out;
  for (const auto& [k, v] : acc) out[k] = v.first / v.second;
  return out;
}

Outcome ratio_regression(const fs::path& baseline_file) {
  Check c;
  std::ifstream in(baseline_file);
  if (!in) {
    c.fail("baseline " + baseline_file.string() + " missing; generate it with --write-baseline");
    return c.outcome();
  }
  const auto base = mean_ratios(read_csv(in));
  const auto rows = baseline_rows();
  const auto now = mean_ratios(rows);
  double worst = 0;
  std::string worst_key;
  for (const auto& r : rows) c.expect(r.violations == 0, "row " + r.family + "/" + r.algo + " has violations");
  for (const auto& [key, ratio] : now) {
    const auto it = base.find(key);
    if (it == base.end()) {
      c.fail("family " + key + " absent from the baseline");
      continue;
    }
    const double growth = it->second > 0 ? ratio / it->second : (ratio > 0 ? INFINITY : 1.0);
    if (growth > worst) {
      worst = growth;
      worst_key = key;
    }
    c.expect(growth <= 1.10, key + " ratio grew " + format_number(growth) + "x");
  }
  c.expect(now.size() == base.size(), "baseline has " + str(base.size()) + " families, run has " + str(now.size()));
  if (c.outcome().pass)
    c.outcome().detail = str(now.size()) + " families within 1.10x of baseline (max " + format_number(worst) + "x at " +
                         worst_key + ")";
  return c.outcome();
}

// ---------------------------------------------------------------------------
// 9. Determinism.
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Check c;
  // Library level.
  {
    SweepSpec spec;
    spec.family = Family::random;
    spec.sizes = {120};
    spec.params = {0.3};
    spec.algos = {SweepAlgo::subset, SweepAlgo::standard};
    spec.seed = 5;
    std::ostringstream a, b;
    write_csv(a, run_sweep(spec));
    write_csv(b, run_sweep(spec));
    c.expect(a.str() == b.str(), "library sweep output differs between runs");
  }
  std::size_t commands = 0;
#ifdef GSKETCH_CLI_PATH
  const fs::path cli = GSKETCH_CLI_PATH;
  const fs::path root = fs::temp_directory_path() / ("gsketch_accept_" + std::to_string(::getpid()));
  fs::create_directories(root);
  const std::vector<std::string> scripts{
      "gen random --n 300 --m 900 --seed 4 --out {d}/g.txt",
      "gen pairs --graph {d}/g.txt --k 120 --seed 4 --out {d}/p.txt",
      "gen subset --graph {d}/g.txt --k 18 --seed 4 --out {d}/s.txt",
      "gen layered --q 7 --layers 7 --out {d}/l.txt --pairs-out {d}/lp.txt",
      "gen grid --w 12 --h 9 --out {d}/grid.txt",
      "preserver build --algo naive --graph {d}/g.txt --pairs {d}/p.txt --out {d}/hn.txt",
      "preserver build --algo new --eps auto --graph {d}/g.txt --pairs {d}/p.txt --out {d}/hf.txt",
      "spanner subset --graph {d}/g.txt --subset {d}/s.txt --d 0.3 --out {d}/ss.txt",
      "spanner standard --graph {d}/g.txt --d 0.3 --ab 0.6667,0.6667 --seed 9 --out {d}/st.txt",
      "cluster --graph {d}/grid.txt --r 1 --params 0.6667,0.6667,2 --out {d}/cl.csv",
      "verify --graph {d}/g.txt --subgraph {d}/hf.txt --pairs {d}/p.txt --budget 0",
      "sweep --family random --sizes 80,120 --params 0.3 --algos subset,standard --seed 3 --out {d}/sw.csv",
      "sweep --family layered --sizes 3,5 --params 0 --algos naive,new --seed 3 --out {d}/swl.csv",
  };
  std::vector<std::string> runs[2];
  for (int round = 0; round < 2; ++round) {
    const fs::path dir = root / ("run" + std::to_string(round));
    fs::create_directories(dir);
    for (std::size_t i = 0; i < scripts.size(); ++i) {
      std::string args = scripts[i];
      for (auto pos = args.find("{d}"); pos != std::string::npos; pos = args.find("{d}"))
        args.replace(pos, 3, dir.string());
      const fs::path out = dir / ("stdout" + std::to_string(i) + ".txt");
      const std::string cmd = "\"" + cli.string() + "\" " + args + " > \"" + out.string() + "\" 2>&1";
      const int rc = std::system(cmd.c_str());
      c.expect(rc == 0, "command failed (" + std::to_string(rc) + "): " + scripts[i]);
    }
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path().filename().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) runs[round].push_back(f + "\n" + slurp(dir / f));
  }
  commands = scripts.size();
  c.expect(runs[0].size() == runs[1].size(), "runs produced different file sets");
  for (std::size_t i = 0; i < std::min(runs[0].size(), runs[1].size()); ++i)
    c.expect(runs[0][i] == runs[1][i], "output differs: " + runs[0][i].substr(0, runs[0][i].find('\n')));
  std::error_code ec;
  fs::remove_all(root, ec);
#endif
  if (c.outcome().pass)
    c.outcome().detail = "library sweep and " + str(commands) + " CLI commands byte-identical across two runs";
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--write-baseline" && i + 1 < argc) {
      std::ofstream out(argv[++i]);
      write_csv(out, baseline_rows());
      std::cout << "baseline written to " << argv[i] << "\n";
      return out ? 0 : 2;
    }
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) only.insert(std::stoi(item));
      continue;
    }
    std::cerr << "usage: acceptance [--only 1,2,...] [--write-baseline FILE]\n";
    return 2;
  }
  auto wanted = [&](int k) { return only.empty() || only.count(k); };

  std::vector<OrientedPathSystem> systems;
  std::vector<const Graph*> hosts;
  std::vector<PreserverCase> pcases;
  std::vector<ChokeCase> ccases;
  // Keep the layered systems alive for criterion 4.
  std::vector<LayeredInstance> layered;

  struct Item {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items{
      {1, "lower-bound exactness", 5, lower_bound_exactness},
      {2, "preserver exactness", 120,
       [&] {
         pcases = preserver_cases();
         return preserver_exactness(pcases, systems, hosts);
       }},
      {3, "choke preserver invariants", 60,
       [&] {
         ccases = choke_cases();
         return choke_invariants(systems, hosts, ccases);
       }},
      {4, "branching size inequality", 0,
       [&] {
         for (std::uint32_t q : {3u, 5u, 7u, 11u}) layered.push_back(layered_graph(q, q));
         for (const auto& inst : layered) {
           OrientedPathSystem sys;
           for (std::size_t i = 0; i < inst.pairs.size(); ++i) sys.paths.push_back({inst.pairs[i], inst.scheme_paths[i], {}});
           systems.push_back(std::move(sys));
           hosts.push_back(&inst.graph);
         }
         if (!wanted(2) || !wanted(3)) {
           Outcome o;
           o.pass = false;
           o.detail = "needs the systems built by criteria 2 and 3";
           return o;
         }
         return branch_inequality(systems, hosts);
       }},
      {5, "clustering invariants", 60, clustering_invariants},
      {6, "path decomposition", 0, path_decomposition},
      {7, "spanner error certificates", 300, spanner_certificates},
      {8, "size-ratio regression", 0, [] { return ratio_regression(GSKETCH_BASELINE_CSV); }},
      {9, "determinism", 0, determinism},
  };

  int failed = 0;
  for (const auto& item : items) {
    if (!wanted(item.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = item.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    if (item.limit_seconds > 0 && secs > item.limit_seconds) {
      o.pass = false;
      o.detail += " [took " + format_number(secs) + " s, limit " + format_number(item.limit_seconds) + " s]";
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", item.id, item.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
