// gsketch - command-line front end for the gsketch library.
//
// Exit codes: 0 success, 1 verification violation, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsketch/canonical.hpp"
#include "gsketch/clustering.hpp"
#include "gsketch/constants.hpp"
#include "gsketch/errors.hpp"
#include "gsketch/graph.hpp"
#include "gsketch/instances.hpp"
#include "gsketch/io.hpp"
#include "gsketch/preserver.hpp"
#include "gsketch/spanner.hpp"
#include "gsketch/sweep.hpp"
#include "gsketch/tiebreak.hpp"
#include "gsketch/verify.hpp"

namespace {

using namespace gsketch;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Writes to `path`, or stdout when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, Fn fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ostringstream buf;
  fn(buf);
  io::write_file(path, buf.str());
}

Regime parse_ab(const std::vector<double>& ab) {
  if (ab.size() != 2) throw std::invalid_argument("--ab expects two values a,b");
  return {ab[0], ab[1]};
}

struct Globals {
  std::string consts;
  unsigned threads = 0;
  std::size_t cap = 2000;

  Constants constants() const {
    Constants c = Constants::from_env();
    c.apply_overrides(consts);
    return c;
  }
};

void print_report(std::ostream& out, const VerifyReport& rep) {
  out << "demands=" << rep.demand_count << " disconnected=" << rep.disconnected
      << " max_additive_error=" << format_number(rep.max_additive_error)
      << " max_stretch=" << format_number(rep.max_multiplicative_stretch) << " budget=" << format_number(rep.budget)
      << " violations=" << rep.violations.size() << '\n';
  for (const auto& v : rep.violations)
    out << "violation " << v.u << ' ' << v.v << " dist_g=" << v.dist_g << " dist_h=" << v.dist_h << '\n';
}

void print_row(std::ostream& out, const SweepRow& row) {
  const SweepRow rows[] = {row};
  write_csv(out, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsketch: distance preservers, clustering and additive spanners"};
  app.require_subcommand(1);
  // "--h" is the grid height, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  Globals globals;
  app.add_option("--consts", globals.consts, "Constant overrides, e.g. c_err=4,c_sample=3");
  app.add_option("--threads", globals.threads, "Worker threads for verification and sweeps (0 = all cores)");
  app.add_option("--cap", globals.cap, "Largest n for all-pairs audits and sweeps")->capture_default_str();

  int status = kOk;

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate graphs, pair sets and node subsets");
  gen->require_subcommand(1);

  std::uint32_t q = 0, layers = 0;
  std::string out, pairs_out;
  auto* gen_layered = gen->add_subcommand("layered", "Layered lower-bound instance");
  gen_layered->add_option("--q", q, "Prime layer width")->required();
  gen_layered->add_option("--layers", layers, "Layer count")->required();
  gen_layered->add_option("--out", out, "Edge-list output (default stdout)");
  gen_layered->add_option("--pairs-out", pairs_out, "First x last layer pairs");
  gen_layered->callback([&] {
    const auto inst = layered_graph(q, layers);
    emit(out, [&](std::ostream& o) { io::write_graph(o, inst.graph); });
    if (!pairs_out.empty()) emit(pairs_out, [&](std::ostream& o) { io::write_pairs(o, inst.pairs); });
  });

  std::size_t n = 0, m = 0, w = 0, h = 0, k = 0;
  std::optional<std::uint64_t> seed;
  auto* gen_random = gen->add_subcommand("random", "Uniform random graph with exactly m edges");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--m", m)->required();
  gen_random->add_option("--seed", seed, "RNG seed (required)")->required();
  gen_random->add_option("--out", out);
  gen_random->callback([&] {
    const auto g = random_graph(n, m, *seed);
    emit(out, [&](std::ostream& o) { io::write_graph(o, g); });
  });

  auto* gen_grid = gen->add_subcommand("grid", "w x h grid");
  gen_grid->add_option("--w", w)->required();
  gen_grid->add_option("--h", h)->required();
  gen_grid->add_option("--out", out);
  gen_grid->callback([&] {
    const auto g = grid_graph(w, h);
    emit(out, [&](std::ostream& o) { io::write_graph(o, g); });
  });

  std::string graph_file;
  auto* gen_pairs = gen->add_subcommand("pairs", "k random connected pairs of a graph");
  gen_pairs->add_option("--graph", graph_file)->required();
  gen_pairs->add_option("--k", k)->required();
  gen_pairs->add_option("--seed", seed, "RNG seed (required)")->required();
  gen_pairs->add_option("--out", out);
  gen_pairs->callback([&] {
    const auto g = io::read_graph(graph_file);
    const auto p = random_pairs(g, k, *seed);
    emit(out, [&](std::ostream& o) { io::write_pairs(o, p); });
  });

  auto* gen_subset = gen->add_subcommand("subset", "k random nodes of a graph");
  gen_subset->add_option("--graph", graph_file)->required();
  gen_subset->add_option("--k", k)->required();
  gen_subset->add_option("--seed", seed, "RNG seed (required)")->required();
  gen_subset->add_option("--out", out);
  gen_subset->callback([&] {
    const auto g = io::read_graph(graph_file);
    const auto s = random_subset(g.node_count(), k, *seed);
    emit(out, [&](std::ostream& o) { io::write_nodes(o, s); });
  });

  // cluster ------------------------------------------------------------------
  Dist radius = 1;
  std::vector<double> bound_params;
  auto* cluster = app.add_subcommand("cluster", "Padded-core clustering as a CSV table");
  cluster->add_option("--graph", graph_file)->required();
  cluster->add_option("--r", radius, "Base radius")->required();
  cluster->add_option("--params", bound_params, "a,b,E")->delimiter(',')->expected(3);
  cluster->add_option("--out", out, "CSV output (default stdout)");
  cluster->callback([&] {
    const auto g = io::read_graph(graph_file);
    const Constants c = globals.constants();
    BoundParams bp;
    if (!bound_params.empty()) {
      bp.a = bound_params[0];
      bp.b = bound_params[1];
      bp.E = bound_params[2];
    }
    bp.c_large = c.c_large;
    bp.c_choke = c.c_choke;
    bp.c_heavy = c.c_heavy;
    bp.validate();
    const auto cl = build_clustering(g, radius);
    const auto labels = classify_clusters(cl, bp);
    emit(out, [&](std::ostream& o) {
      o << "center,r_i,core_size,cluster_size,label,choke_radius,choke_ratio\n";
      for (std::size_t i = 0; i < cl.size(); ++i) {
        const auto choke = find_choke_layer(g, cl.centers[i], cl.radii[i], bp);
        o << cl.centers[i] << ',' << cl.radii[i] << ',' << cl.cores[i].size() << ',' << cl.clusters[i].size() << ','
          << label_name(labels[i]) << ',' << choke.radius << ',' << format_number(choke.ratio) << '\n';
      }
    });
  });

  // preserver ----------------------------------------------------------------
  auto* preserver = app.add_subcommand("preserver", "Distance preservers");
  preserver->require_subcommand(1);
  std::string algo = "naive", eps = "auto", pairs_file;
  auto* build = preserver->add_subcommand("build", "Build a preserver for a pair set");
  build->add_option("--algo", algo, "naive or new")->check(CLI::IsMember({"naive", "new"}))->capture_default_str();
  build->add_option("--eps", eps, "auto or a real in [0,1] (new only)")->capture_default_str();
  build->add_option("--graph", graph_file)->required();
  build->add_option("--pairs", pairs_file)->required();
  build->add_option("--out", out, "Subgraph edge-list output")->required();
  std::uint32_t layered_q = 0;
  build->add_option("--layered-q", layered_q,
                    "Naive only: the graph is a layered instance of width q; use its modular path scheme");
  build->callback([&] {
    const auto g = io::read_graph(graph_file);
    const auto pairs = io::read_pairs(pairs_file, g.node_count());
    Preserver pres;
    if (algo == "naive" && layered_q > 0) {
      if (g.node_count() % layered_q != 0) throw std::invalid_argument("node count is not a multiple of --layered-q");
      const auto inst = layered_graph(layered_q, static_cast<std::uint32_t>(g.node_count() / layered_q));
      if (!std::ranges::equal(inst.graph.edges(), g.edges()))
        throw std::invalid_argument("graph is not the layered instance for q = " + std::to_string(layered_q));
      pres = naive_preserver(g, pairs, inst.scheme());
    } else if (algo == "naive") {
      pres = naive_preserver(g, pairs);
    } else {
      PreserverParams pp;
      const Regime ab = select_regime(g.node_count(), std::max<std::size_t>(pairs.size(), 1));
      pp.a = ab.a;
      pp.b = ab.b;
      pp.c_detect = globals.constants().c_detect;
      if (eps != "auto") pp.epsilon = std::stod(eps);
      pres = new_preserver(g, pairs, pp);
    }
    emit(out, [&](std::ostream& o) { io::write_subgraph(o, pres.h); });
    const auto hist = pres.histogram();
    const auto rep = verify(g, pres.h, pairs, 0.0, globals.threads);
    std::cout << "m=" << pres.h.edge_count() << " n=" << g.node_count() << " pairs=" << pairs.size()
              << " b=" << branching_events(g, pres.system) << " naive=" << hist.naive << " leftover=" << hist.leftover
              << " auxiliary=" << hist.auxiliary << " aux_preservers=" << pres.auxiliaries.size()
              << " violations=" << rep.violations.size() << '\n';
    if (!rep.ok()) status = kViolation;
  });

  // spanner ------------------------------------------------------------------
  auto* spanner = app.add_subcommand("spanner", "Additive spanners");
  spanner->require_subcommand(1);
  double d = 0.0;
  std::vector<double> ab{2.0 / 3.0, 2.0 / 3.0};
  std::string subset_file;

  auto report_spanner = [&](const Graph& g, const SpannerResult& r) {
    emit(out, [&](std::ostream& o) { io::write_subgraph(o, r.h); });
    auto row = spanner_row(g, r, d, parse_ab(ab), globals.constants(), globals.threads);
    row.family = "input";
    row.size = g.node_count();
    row.algo = spanner_kind_name(r.kind);
    row.param = d;
    row.seed = seed.value_or(0);
    print_row(std::cout, row);
    if (row.violations > 0) status = kViolation;
  };

  auto* sp_subset = spanner->add_subcommand("subset", "+n^d subset spanner");
  sp_subset->add_option("--graph", graph_file)->required();
  sp_subset->add_option("--subset", subset_file, "Node-set file")->required();
  sp_subset->add_option("--d", d)->required();
  sp_subset->add_option("--ab", ab, "a,b for the bound columns")->delimiter(',')->expected(2);
  sp_subset->add_option("--out", out)->required();
  sp_subset->callback([&] {
    const auto g = io::read_graph(graph_file);
    const auto s = io::read_nodes(subset_file, g.node_count());
    report_spanner(g, subset_spanner(g, s, d));
  });

  auto* sp_standard = spanner->add_subcommand("standard", "+O(n^d) standard spanner");
  sp_standard->add_option("--graph", graph_file)->required();
  sp_standard->add_option("--d", d)->required();
  sp_standard->add_option("--ab", ab, "a,b")->delimiter(',')->expected(2);
  sp_standard->add_option("--seed", seed, "RNG seed (required)")->required();
  sp_standard->add_option("--out", out)->required();
  sp_standard->callback([&] {
    const auto g = io::read_graph(graph_file);
    if (g.node_count() > globals.cap)
      throw std::invalid_argument("n = " + std::to_string(g.node_count()) + " exceeds the all-pairs cap " + std::to_string(globals.cap));
    const Constants c = globals.constants();
    StandardParams sp;
    sp.d = d;
    const Regime r = parse_ab(ab);
    sp.a = r.a;
    sp.b = r.b;
    sp.c_sample = c.c_sample;
    sp.c_err = c.c_err;
    sp.seed = *seed;
    report_spanner(g, standard_spanner(g, sp));
  });

  // verify -------------------------------------------------------------------
  std::string subgraph_file;
  double budget = 0.0;
  bool all_pairs = false;
  auto* ver = app.add_subcommand("verify", "Compare distances in a subgraph against the graph");
  ver->add_option("--graph", graph_file)->required();
  ver->add_option("--subgraph", subgraph_file)->required();
  auto* opt_pairs = ver->add_option("--pairs", pairs_file, "Demand pairs");
  auto* opt_subset = ver->add_option("--subset", subset_file, "All pairs within a node set");
  auto* opt_all = ver->add_flag("--all-pairs", all_pairs, "Every pair of nodes");
  opt_pairs->excludes(opt_subset)->excludes(opt_all);
  opt_subset->excludes(opt_all);
  ver->add_option("--budget", budget, "Allowed additive error (0 = exact)")->capture_default_str();
  ver->callback([&] {
    const auto g = io::read_graph(graph_file);
    const auto data = [&] {
      std::ifstream in(subgraph_file);
      if (!in) throw std::runtime_error("cannot open " + subgraph_file);
      return io::parse_edge_list(in);
    }();
    if (data.node_count > g.node_count()) throw std::invalid_argument("subgraph has more nodes than the graph");
    PairSet demands;
    if (!pairs_file.empty()) {
      demands = io::read_pairs(pairs_file, g.node_count());
    } else if (!subset_file.empty()) {
      const auto s = io::read_nodes(subset_file, g.node_count());
      demands = PairSet::all_pairs_of(g.node_count(), s);
    } else if (all_pairs) {
      if (g.node_count() > globals.cap)
        throw std::invalid_argument("n = " + std::to_string(g.node_count()) + " exceeds the all-pairs cap " + std::to_string(globals.cap));
      demands = PairSet::all_pairs(g.node_count());
    } else {
      throw std::invalid_argument("verify needs one of --pairs, --subset or --all-pairs");
    }
    const auto rep = verify(g, data.edges, demands, budget, globals.threads);
    print_report(std::cout, rep);
    if (!rep.ok()) status = kViolation;
  });

  // sweep --------------------------------------------------------------------
  SweepSpec spec;
  std::string family = "random";
  std::vector<std::string> algos;
  std::vector<double> sweep_ab;
  auto* sweep = app.add_subcommand("sweep", "Size/error sweeps as CSV");
  sweep->add_option("--family", family, "layered, random or grid")->required();
  sweep->add_option("--sizes", spec.sizes, "q (layered), n (random) or side (grid)")->delimiter(',')->required();
  sweep->add_option("--params", spec.params, "|P| for preservers, d for spanners")->delimiter(',')->required();
  sweep->add_option("--algos", algos, "naive,new,subset,standard")->delimiter(',')->required();
  sweep->add_option("--ab", sweep_ab, "Fix (a,b) instead of the per-cell default")->delimiter(',')->expected(2);
  sweep->add_option("--seed", seed, "Base RNG seed (required)")->required();
  sweep->add_option("--seeds", spec.seeds, "Number of consecutive seeds")->capture_default_str();
  sweep->add_option("--density", spec.density, "Random family: m = density * n")->capture_default_str();
  sweep->add_option("--subset-size", spec.subset_size, "Subset spanner |S| (0 = ceil(sqrt n))")->capture_default_str();
  sweep->add_option("--out", out, "CSV output (default stdout)");
  sweep->callback([&] {
    spec.family = parse_family(family);
    for (const auto& a : algos) spec.algos.push_back(parse_algo(a));
    if (!sweep_ab.empty()) spec.ab = parse_ab(sweep_ab);
    spec.seed = *seed;
    spec.cap = globals.cap;
    spec.consts = globals.constants();
    spec.threads = globals.threads;
    const auto rows = run_sweep(spec);
    emit(out, [&](std::ostream& o) { write_csv(o, rows); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
