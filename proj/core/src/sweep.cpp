#include "gsketch/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gsketch/clustering.hpp"
#include "gsketch/instances.hpp"
#include "gsketch/verify.hpp"

namespace gsketch {

namespace {

constexpr Regime kSpannerDefault{2.0 / 3.0, 2.0 / 3.0};

std::size_t node_count_for(Family f, std::size_t size) {
  switch (f) {
    case Family::layered: return size * size;
    case Family::random: return size;
    case Family::grid: return size * size;
  }
  return size;
}

bool is_preserver(SweepAlgo a) { return a == SweepAlgo::naive || a == SweepAlgo::fresh; }

struct Cell {
  std::size_t size;
  std::uint64_t seed;
  SweepAlgo algo;
  double param;
};

Graph build_instance(const SweepSpec& spec, std::size_t size, std::uint64_t seed, const LayeredInstance** layered,
                     std::vector<LayeredInstance>& layered_store) {
  switch (spec.family) {
    case Family::layered: {
      layered_store.push_back(layered_graph(static_cast<std::uint32_t>(size), static_cast<std::uint32_t>(size)));
      *layered = &layered_store.back();
      return layered_store.back().graph;
    }
    case Family::random: {
      const double slots = static_cast<double>(size) * static_cast<double>(size > 0 ? size - 1 : 0) / 2.0;
      const double m = std::min(std::round(spec.density * static_cast<double>(size)), slots);
      return random_graph(size, static_cast<std::size_t>(m), seed);
    }
    case Family::grid: return grid_graph(size, size);
  }
  throw std::logic_error("unknown family");
}

SweepRow run_cell(const SweepSpec& spec, const Cell& cell) {
  std::vector<LayeredInstance> store;
  store.reserve(1);
  const LayeredInstance* layered = nullptr;
  const Graph g = build_instance(spec, cell.size, cell.seed, &layered, store);
  const std::size_t n = g.node_count();

  SweepRow row;
  if (is_preserver(cell.algo)) {
    PairSet pairs;
    if (layered) {
      const auto all = layered->pairs.pairs();
      std::size_t k = cell.param <= 0.0 ? all.size() : std::min(all.size(), static_cast<std::size_t>(cell.param));
      pairs = PairSet(n, all.first(k));
    } else {
      const auto k = std::min<std::uint64_t>(connected_pair_count(g), static_cast<std::uint64_t>(std::max(cell.param, 0.0)));
      pairs = random_pairs(g, static_cast<std::size_t>(k), cell.seed ^ 0x9e3779b97f4a7c15ull);
    }
    const Regime ab = spec.ab ? *spec.ab : select_regime(n, std::max<std::size_t>(pairs.size(), 1));
    Preserver pres;
    if (cell.algo == SweepAlgo::naive) {
      pres = layered ? naive_preserver(g, pairs, layered->scheme()) : naive_preserver(g, pairs);
    } else {
      PreserverParams pp;
      pp.a = ab.a;
      pp.b = ab.b;
      pp.c_detect = spec.consts.c_detect;
      pres = new_preserver(g, pairs, pp);
    }
    row = preserver_row(g, pres, ab, 1);
  } else {
    const Regime ab = spec.ab ? *spec.ab : kSpannerDefault;
    const double d = cell.param;
    SpannerResult r;
    if (cell.algo == SweepAlgo::subset) {
      const std::size_t k = spec.subset_size ? std::min(spec.subset_size, n)
                                             : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      const auto s = random_subset(n, k, cell.seed + 2);
      r = subset_spanner(g, s, d);
    } else {
      StandardParams sp;
      sp.d = d;
      sp.a = ab.a;
      sp.b = ab.b;
      sp.c_sample = spec.consts.c_sample;
      sp.c_err = spec.consts.c_err;
      sp.seed = cell.seed + 3;
      r = standard_spanner(g, sp);
    }
    row = spanner_row(g, r, d, ab, spec.consts, 1);
  }
  row.family = family_name(spec.family);
  row.size = cell.size;
  row.algo = algo_name(cell.algo);
  row.param = cell.param;
  row.seed = cell.seed;
  return row;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("bad number '" + s + "'");
  return v;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw std::runtime_error("bad integer '" + s + "'");
  return v;
}

}  // namespace

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::layered: return "layered";
    case Family::random: return "random";
    case Family::grid: return "grid";
  }
  return "?";
}

const char* algo_name(SweepAlgo a) noexcept {
  switch (a) {
    case SweepAlgo::naive: return "naive";
    case SweepAlgo::fresh: return "new";
    case SweepAlgo::subset: return "subset";
    case SweepAlgo::standard: return "standard";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::layered, Family::random, Family::grid})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown family '" + s + "' (expected layered, random or grid)");
}

SweepAlgo parse_algo(const std::string& s) {
  for (SweepAlgo a : {SweepAlgo::naive, SweepAlgo::fresh, SweepAlgo::subset, SweepAlgo::standard})
    if (s == algo_name(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + s + "' (expected naive, new, subset or standard)");
}

void SweepSpec::validate() const {
  if (sizes.empty() || params.empty() || algos.empty()) throw std::invalid_argument("sweep: size, parameter and algorithm grids must be nonempty");
  if (seeds == 0) throw std::invalid_argument("sweep: need at least one seed");
  for (std::size_t s : sizes) {
    if (family == Family::layered && !is_prime(s)) throw std::invalid_argument("sweep: layered size q = " + std::to_string(s) + " is not prime");
    if (s < 2) throw std::invalid_argument("sweep: sizes must be at least 2");
    const std::size_t n = node_count_for(family, s);
    if (n > cap) {
      throw std::invalid_argument("sweep: refusing cell with n = " + std::to_string(n) + " above the cap of " +
                                  std::to_string(cap) + " (raise it with --cap)");
    }
  }
  for (SweepAlgo a : algos) {
    if (is_preserver(a)) continue;
    for (double d : params)
      if (!(d >= 0.0)) throw std::invalid_argument("sweep: spanner parameter d must be non-negative");
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<Cell> cells;
  for (std::size_t size : spec.sizes)
    for (std::size_t k = 0; k < spec.seeds; ++k)
      for (SweepAlgo algo : spec.algos)
        for (double param : spec.params) cells.push_back({size, spec.seed + k, algo, param});

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < cells.size();) {
      try {
        rows[i] = run_cell(spec, cells[i]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

SweepRow preserver_row(const Graph& g, const Preserver& pres, Regime ab, unsigned threads) {
  SweepRow row;
  row.n = g.node_count();
  row.m = g.edge_count();
  row.a = ab.a;
  row.b = ab.b;
  row.demands = pres.pairs.size();
  row.h_edges = pres.h.edge_count();
  const auto rep = verify(g, pres.h, pres.pairs, 0.0, threads);
  row.max_error = rep.max_additive_error;
  row.violations = rep.violations.size();
  PreserverParams pp;
  pp.a = ab.a;
  pp.b = ab.b;
  row.bound = preserver_size_bound(std::max<std::size_t>(row.n, 1), std::max<std::size_t>(row.demands, 1), pp, 1.0);
  row.ratio = static_cast<double>(row.h_edges) / row.bound;
  return row;
}

SweepRow spanner_row(const Graph& g, const SpannerResult& r, double d, Regime ab, const Constants& c, unsigned threads) {
  SweepRow row;
  const std::size_t n = g.node_count();
  row.n = n;
  row.m = g.edge_count();
  row.a = ab.a;
  row.b = ab.b;
  row.h_edges = r.h.edge_count();

  BoundParams bp;
  bp.a = ab.a;
  bp.b = ab.b;
  bp.d = d;
  bp.c_large = c.c_large;
  bp.c_choke = c.c_choke;
  bp.c_heavy = c.c_heavy;
  VerifyReport rep;
  if (r.kind == SpannerKind::standard) {
    rep = verify_all_pairs(g, r.h, r.beta_target, threads);
    StandardParams sp;
    sp.d = d;
    sp.a = ab.a;
    sp.b = ab.b;
    bp.E = sp.density_target(n);
    row.bound = standard_size_bound(n, ab.a, ab.b, d);
  } else {
    rep = verify(g, r.h, PairSet::all_pairs_of(n, r.subset), r.beta_target, threads);
    bp.E = std::pow(static_cast<double>(std::max<std::size_t>(r.subset.size(), 1)), bp.denom() / 2.0) *
           std::pow(static_cast<double>(n), -d * (1.0 - ab.a));
    row.bound = subset_size_bound(n, r.subset.size(), ab.a, ab.b, d);
  }
  row.demands = rep.demand_count;
  row.max_error = rep.max_additive_error;
  row.violations = rep.violations.size();
  row.ratio = static_cast<double>(row.h_edges) / row.bound;

  if (r.has_log && n > 0) {
    const auto cl = build_clustering(g, classification_radius(n, d));
    const auto st = classify_added_edges(r, cl, bp);
    row.extreme = st.extreme;
    row.small = st.small;
    row.large = st.large;
    row.heavy = st.heavy;
    row.light = st.light;
  }
  return row;
}

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header{"family", "size",     "n",     "m",          "algo",    "a",     "b",
                                               "param",  "seed",     "demands", "h_edges",  "max_error", "violations",
                                               "bound",  "ratio",    "extreme", "small",    "large",   "heavy", "light"};
  return header;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  const auto& h = csv_header();
  for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.size << ',' << r.n << ',' << r.m << ',' << r.algo << ',' << format_number(r.a) << ','
        << format_number(r.b) << ',' << format_number(r.param) << ',' << r.seed << ',' << r.demands << ','
        << r.h_edges << ',' << format_number(r.max_error) << ',' << r.violations << ',' << format_number(r.bound)
        << ',' << format_number(r.ratio) << ',' << r.extreme << ',' << r.small << ',' << r.large << ',' << r.heavy
        << ',' << r.light << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (split_csv(line) != csv_header()) throw std::runtime_error("unexpected CSV header: " + line);
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != csv_header().size())
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + std::to_string(csv_header().size()) + " fields");
    try {
      SweepRow r;
      r.family = f[0];
      r.size = to_u64(f[1]);
      r.n = to_u64(f[2]);
      r.m = to_u64(f[3]);
      r.algo = f[4];
      r.a = to_double(f[5]);
      r.b = to_double(f[6]);
      r.param = to_double(f[7]);
      r.seed = to_u64(f[8]);
      r.demands = to_u64(f[9]);
      r.h_edges = to_u64(f[10]);
      r.max_error = to_double(f[11]);
      r.violations = to_u64(f[12]);
      r.bound = to_double(f[13]);
      r.ratio = to_double(f[14]);
      r.extreme = to_u64(f[15]);
      r.small = to_u64(f[16]);
      r.large = to_u64(f[17]);
      r.heavy = to_u64(f[18]);
      r.light = to_u64(f[19]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace gsketch
