#include "gsketch/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsketch/canonical.hpp"
#include "gsketch/errors.hpp"
#include "gsketch/instances.hpp"

namespace gsketch {

namespace {

double log2n(std::size_t n) { return std::max(1.0, std::log2(static_cast<double>(n))); }

Path sub_path(const Path& p, std::size_t from, std::size_t to) {
  Path out;
  out.nodes.assign(p.nodes.begin() + static_cast<std::ptrdiff_t>(from), p.nodes.begin() + static_cast<std::ptrdiff_t>(to) + 1);
  return out;
}

// Distances from one source in the evolving H, recomputed only after H grows.
class LazyDistances {
 public:
  explicit LazyDistances(const Subgraph& h) : h_(h) {}
  const std::vector<Dist>& from(NodeId source) {
    if (source != source_ || h_.edge_count() != edges_at_) {
      dist_ = bfs_distances(h_, source);
      source_ = source;
      edges_at_ = h_.edge_count();
    }
    return dist_;
  }

 private:
  const Subgraph& h_;
  NodeId source_ = ~NodeId{0};
  std::size_t edges_at_ = 0;
  std::vector<Dist> dist_;
};

void log_addition(SpannerResult& r, AdditionPhase phase, NodePair trigger, Path path, std::size_t& counter) {
  if (path.length() == 0) return;
  auto added = r.h.add_path(path);
  counter += added.size();
  r.log.push_back({phase, trigger, std::move(path), std::move(added)});
}

// Algorithm 1's loop on top of whatever r.h already holds.
void add_subset_paths(const Graph& g, SpannerResult& r, CanonicalPaths& paths, double d) {
  const double slack = std::pow(static_cast<double>(g.node_count()), d);
  LazyDistances dh(r.h);
  for (std::size_t i = 0; i < r.subset.size(); ++i) {
    const NodeId s1 = r.subset[i];
    const auto& dg = paths.tree(s1).distances();
    for (std::size_t j = i + 1; j < r.subset.size(); ++j) {
      const NodeId s2 = r.subset[j];
      if (!reachable(dg[s2])) continue;
      const Dist h_dist = dh.from(s1)[s2];
      if (reachable(h_dist) && static_cast<double>(h_dist) <= static_cast<double>(dg[s2]) + slack) continue;
      log_addition(r, AdditionPhase::subset, {s1, s2}, paths.path(s1, s2), r.subset_edges);
    }
  }
}

std::vector<NodeId> sorted_unique(std::span<const NodeId> s, std::size_t n) {
  std::vector<NodeId> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (NodeId v : out)
    if (v >= n) throw std::invalid_argument("subset node " + std::to_string(v) + " out of range");
  return out;
}

}  // namespace

const char* spanner_kind_name(SpannerKind k) noexcept {
  switch (k) {
    case SpannerKind::multiplicative: return "multiplicative";
    case SpannerKind::subset: return "subset";
    case SpannerKind::standard: return "standard";
  }
  return "?";
}

const char* addition_phase_name(AdditionPhase p) noexcept {
  switch (p) {
    case AdditionPhase::subset: return "subset";
    case AdditionPhase::prefix: return "prefix";
    case AdditionPhase::suffix: return "suffix";
    case AdditionPhase::whole: return "whole";
  }
  return "?";
}

int default_stretch(std::size_t n) {
  const double l = n < 2 ? 0.0 : std::log2(static_cast<double>(n));
  const int t = 2 * static_cast<int>(std::ceil(l / 2.0)) - 1;
  return std::max(3, t);
}

SpannerResult multiplicative_spanner(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("multiplicative_spanner: stretch must be at least 1");
  SpannerResult r;
  r.kind = SpannerKind::multiplicative;
  r.h = Subgraph(g);
  r.stretch = t;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!reachable(bounded_distance(r.h, ed.u, ed.v, t))) r.h.add(e);
  }
  r.mult_edges = r.h.edge_count();
  return r;
}

SpannerResult subset_spanner(const Graph& g, std::span<const NodeId> s, double d) {
  if (!(d >= 0.0)) throw PreconditionError("subset_spanner: d must be non-negative");
  SpannerResult r = multiplicative_spanner(g, default_stretch(g.node_count()));
  r.kind = SpannerKind::subset;
  r.beta_target = std::pow(static_cast<double>(g.node_count()), d);
  r.subset = sorted_unique(s, g.node_count());
  r.has_log = true;
  CanonicalPaths paths(g);
  add_subset_paths(g, r, paths, d);
  return r;
}

double StandardParams::density_target(std::size_t n) const {
  const double k = a + 2.0 * b + 1.0;
  const double e = (a + 2.0 * b - 1.0) / k - d * (10.0 * b - a + 1.0) / (3.0 * k);
  return std::pow(static_cast<double>(n), e);
}

std::size_t StandardParams::sample_size(std::size_t n) const {
  const double k = 2.0 * b + a - 1.0;
  const double nn = static_cast<double>(n);
  const double raw = c_sample * log2n(n) * std::pow(nn, 1.0 - d * (2.0 * b - a + 1.0) / k) /
                     std::pow(density_target(n), (3.0 - 2.0 * b - a) / k);
  const double c = std::ceil(raw - 1e-9);
  if (!(c >= 1.0)) return 1;
  return c >= nn ? n : static_cast<std::size_t>(c);
}

void StandardParams::validate() const {
  if (!(d >= 0.0)) throw PreconditionError("standard spanner: d must be non-negative");
  if (!(2.0 * b + a - 1.0 > 0.0)) throw PreconditionError("standard spanner: need 2b + a - 1 > 0");
  if (!(c_sample > 0.0 && c_err > 0.0)) throw PreconditionError("standard spanner: constants must be positive");
}

SpannerResult standard_spanner(const Graph& g, const StandardParams& sp) {
  sp.validate();
  const std::size_t n = g.node_count();
  if (n < 2) throw PreconditionError("standard spanner: need at least 2 nodes");
  const double nd = std::pow(static_cast<double>(n), sp.d);

  SpannerResult r = multiplicative_spanner(g, default_stretch(n));
  r.kind = SpannerKind::standard;
  r.beta_target = sp.c_err * nd;
  r.subset = random_subset(n, sp.sample_size(n), sp.seed);
  r.has_log = true;
  CanonicalPaths paths(g);
  add_subset_paths(g, r, paths, sp.d);

  const auto dist_s = multi_source_distances(g, r.subset);
  const double near = nd / log2n(n);
  auto is_near = [&](NodeId x) { return reachable(dist_s[x]) && static_cast<double>(dist_s[x]) <= near; };

  LazyDistances dh(r.h);
  for (NodeId u = 0; u < n; ++u) {
    const auto& tree = paths.tree(u);
    for (NodeId v = u + 1; v < n; ++v) {
      const Dist dg = tree.distance(v);
      if (!reachable(dg)) continue;
      const Dist h_dist = dh.from(u)[v];
      if (reachable(h_dist) && static_cast<double>(h_dist) <= static_cast<double>(dg) + r.beta_target) continue;
      const Path p = tree.path_to(v);
      std::size_t first = p.nodes.size(), last = 0;
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (!is_near(p.nodes[i])) continue;
        if (first == p.nodes.size()) first = i;
        last = i;
      }
      if (first == p.nodes.size()) {
        log_addition(r, AdditionPhase::whole, {u, v}, p, r.path_edges);
        continue;
      }
      log_addition(r, AdditionPhase::prefix, {u, v}, sub_path(p, 0, first), r.path_edges);
      Path suffix = sub_path(p, last, p.nodes.size() - 1);
      std::reverse(suffix.nodes.begin(), suffix.nodes.end());
      log_addition(r, AdditionPhase::suffix, {u, v}, std::move(suffix), r.path_edges);
    }
  }
  return r;
}

double heavy_threshold(std::size_t x_size, const BoundParams& p) {
  return p.c_heavy * std::pow(static_cast<double>(x_size), (p.b + p.a - 1.0) / p.b) * std::pow(p.E, (p.b - 1.0) / p.b);
}

EdgeClassStats classify_added_edges(const SpannerResult& result, const Clustering& cl, const BoundParams& p) {
  if (!result.has_log) throw std::invalid_argument("classify_added_edges: result has no addition log");
  p.validate();
  const Graph& g = result.h.host();
  const auto labels = classify_clusters(cl, p);
  EdgeClassStats st;
  std::vector<std::uint8_t> is_new(g.edge_count(), 0);
  for (const auto& add : result.log) {
    for (EdgeId e : add.new_edges) is_new[e] = 1;
    const auto dec = decompose_path(g, add.path, cl, labels);
    for (const auto& sp : dec.subpaths) {
      std::size_t fresh = 0;
      for (EdgeId e : path_edges(g, sp.path)) {
        if (!is_new[e]) continue;
        is_new[e] = 0;
        ++fresh;
      }
      st.total += fresh;
      switch (sp.cls) {
        case SubpathClass::extreme: st.extreme += fresh; break;
        case SubpathClass::small: st.small += fresh; break;
        case SubpathClass::large:
          st.large += fresh;
          if (static_cast<double>(fresh) >= heavy_threshold(cl.clusters[sp.cluster].size(), p))
            st.heavy += fresh;
          else
            st.light += fresh;
          break;
      }
    }
  }
  return st;
}

Dist classification_radius(std::size_t n, double d) {
  const double nd = std::pow(static_cast<double>(n), d);
  const double denom = 8.0 * log2n(n) * std::pow(4.0, static_cast<double>(growth_exponent(n)));
  const double r = std::floor(nd / denom);
  return r < 1.0 ? 1 : static_cast<Dist>(r);
}

std::size_t missing_edges(const Graph& g, const Subgraph& h, const Path& path) {
  std::size_t missing = 0;
  for (EdgeId e : path_edges(g, path))
    if (!h.contains(e)) ++missing;
  return missing;
}

double subset_size_bound(std::size_t n, std::size_t s_count, double a, double b, double d) {
  const double nn = static_cast<double>(n);
  return nn + std::pow(static_cast<double>(s_count), (2.0 * b + a - 1.0) / 2.0) * std::pow(nn, 1.0 - d * (1.0 - a));
}

double standard_size_bound(std::size_t n, double a, double b, double d) {
  const double k = a + 2.0 * b + 1.0;
  return std::pow(static_cast<double>(n), 1.0 + (a + 2.0 * b - 1.0) / k - d * (10.0 * b - a + 1.0) / (3.0 * k));
}

}  // namespace gsketch
