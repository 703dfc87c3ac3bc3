#include "gsketch/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gsketch/errors.hpp"

namespace gsketch {

namespace {

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) { return std::binary_search(v.begin(), v.end(), x); }

// Cumulative ball sizes |B<=(v, k)| for k = 0..ecc(v).
std::vector<std::size_t> ball_profile(const Graph& g, NodeId v) {
  const auto dist = bfs_distances(g, v);
  std::vector<std::size_t> shells;
  for (Dist d : dist) {
    if (!reachable(d)) continue;
    if (shells.size() <= static_cast<std::size_t>(d)) shells.resize(static_cast<std::size_t>(d) + 1, 0);
    ++shells[static_cast<std::size_t>(d)];
  }
  std::partial_sum(shells.begin(), shells.end(), shells.begin());
  return shells;
}

std::size_t ball_size(const std::vector<std::size_t>& profile, Dist r) {
  return profile[std::min(static_cast<std::size_t>(r), profile.size() - 1)];
}

}  // namespace

bool Clustering::in_core(std::size_t i, NodeId v) const { return sorted_contains(cores[i], v); }
bool Clustering::in_cluster(std::size_t i, NodeId v) const { return sorted_contains(clusters[i], v); }

std::size_t growth_factor(std::size_t n) {
  if (n <= 2) return 2;
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
}

std::size_t growth_exponent(std::size_t n) {
  if (n <= 2) return 1;
  const double l = std::log2(static_cast<double>(n));
  const double ll = std::log2(l);
  if (ll <= 0.0) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(l / ll - 1e-12)));
}

Clustering build_clustering(const Graph& g, Dist r) {
  if (r < 1) throw std::invalid_argument("build_clustering: r must be at least 1");
  const std::size_t n = g.node_count();
  const std::size_t factor = growth_factor(n);
  Clustering cl;
  cl.base_radius = r;

  std::vector<Dist> rv(n, r);
  for (NodeId v = 0; v < n; ++v) {
    const auto profile = ball_profile(g, v);
    std::size_t steps = 0;
    // Once 4 r_v passes the eccentricity both balls are the whole component,
    // so the test passes and the loop ends.
    while (ball_size(profile, rv[v]) * factor < ball_size(profile, 4 * rv[v])) {
      rv[v] *= 4;
      ++steps;
    }
    cl.max_growth_steps = std::max(cl.max_growth_steps, steps);
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&rv](NodeId x, NodeId y) { return rv[x] > rv[y]; });

  std::vector<std::uint8_t> deleted(n, 0);
  for (NodeId v : order) {
    if (deleted[v]) continue;
    deleted[v] = 1;
    const auto dist = bfs_distances(g, v);
    for (NodeId u = 0; u < n; ++u)
      if (!deleted[u] && reachable(dist[u]) && dist[u] <= rv[u] + rv[v]) deleted[u] = 1;
    const Dist ri = 2 * rv[v];
    cl.centers.push_back(v);
    cl.radii.push_back(ri);
    std::vector<NodeId> core, cluster;
    for (NodeId u = 0; u < n; ++u) {
      if (!reachable(dist[u])) continue;
      if (dist[u] <= ri) core.push_back(u);
      if (dist[u] <= 2 * ri) cluster.push_back(u);
    }
    cl.cores.push_back(std::move(core));
    cl.clusters.push_back(std::move(cluster));
  }

  cl.first_core.assign(n, ~std::uint32_t{0});
  for (std::size_t i = cl.size(); i-- > 0;)
    for (NodeId u : cl.cores[i]) cl.first_core[u] = static_cast<std::uint32_t>(i);
  return cl;
}

void BoundParams::validate() const {
  if (!(denom() > 0.0)) throw PreconditionError("bound parameters need 2b + a - 1 > 0");
  if (!(E > 0.0)) throw PreconditionError("density target E must be positive");
  if (!(c_large > 0.0 && c_choke > 0.0 && c_heavy > 0.0))
    throw PreconditionError("tuning constants must be positive");
}

const char* label_name(ClusterLabel l) noexcept { return l == ClusterLabel::large ? "large" : "small"; }

double large_threshold(Dist r, const BoundParams& p) {
  p.validate();
  const double k = p.denom();
  return p.c_large * std::pow(static_cast<double>(r), 2.0 * p.b / k) * std::pow(p.E, 1.0 / k);
}

ClusterLabel classify_cluster(std::size_t x_size, Dist r, const BoundParams& p) {
  if (x_size == 0) return ClusterLabel::small;
  return static_cast<double>(x_size) >= large_threshold(r, p) ? ClusterLabel::large : ClusterLabel::small;
}

std::vector<ClusterLabel> classify_clusters(const Clustering& cl, const BoundParams& p) {
  std::vector<ClusterLabel> out;
  out.reserve(cl.size());
  for (const auto& x : cl.clusters) out.push_back(classify_cluster(x.size(), cl.base_radius, p));
  return out;
}

ChokeLayer find_choke_layer(const Graph& g, NodeId center, Dist r_i, const BoundParams& p) {
  if (r_i < 1) throw std::invalid_argument("find_choke_layer: r_i must be at least 1");
  if (center >= g.node_count()) throw std::invalid_argument("find_choke_layer: center out of range");
  const auto shells = shell_sizes(g, center, 2 * r_i);
  ChokeLayer best;
  bool have = false;
  std::size_t below = 0;  // |B<(center, rbar)|
  for (Dist k = 0; k <= r_i; ++k) below += shells[static_cast<std::size_t>(k)];
  for (Dist rbar = r_i + 1; rbar <= 2 * r_i; ++rbar) {
    const double eq = static_cast<double>(shells[static_cast<std::size_t>(rbar)]);
    const double le = static_cast<double>(below) + eq;
    const double ratio = std::pow(le, p.a) * std::pow(eq * eq, p.b) / static_cast<double>(below);
    if (!have || ratio < best.ratio) {
      best.radius = rbar;
      best.ratio = ratio;
      have = true;
    }
    below += shells[static_cast<std::size_t>(rbar)];
  }
  best.within_bound = best.ratio <= p.c_choke * p.E;
  return best;
}

std::size_t large_pair_budget(Dist r, const BoundParams& p) {
  p.validate();
  const double k = p.denom();
  const double v = p.c_large * std::pow(static_cast<double>(r), 2.0 * (1.0 - p.a) / k) * std::pow(p.E, 2.0 / k);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(v + 1e-9)));
}

const char* subpath_class_name(SubpathClass c) noexcept {
  switch (c) {
    case SubpathClass::extreme: return "extreme";
    case SubpathClass::small: return "small";
    case SubpathClass::large: return "large";
  }
  return "?";
}

Path Decomposition::concatenated() const {
  Path out;
  for (std::size_t k = 0; k < subpaths.size(); ++k) {
    const auto& nodes = subpaths[k].path.nodes;
    out.nodes.insert(out.nodes.end(), nodes.begin() + (k == 0 ? 0 : 1), nodes.end());
  }
  return out;
}

Decomposition decompose_path(const Graph& g, const Path& path, const Clustering& cl,
                             const std::vector<ClusterLabel>& labels) {
  if (path.empty()) throw std::invalid_argument("decompose_path: empty path");
  if (labels.size() != cl.size()) throw std::invalid_argument("decompose_path: one label per cluster required");
  if (cl.first_core.size() != g.node_count()) throw std::invalid_argument("decompose_path: clustering is for another graph");

  const auto& nodes = path.nodes;
  const NodeId u = nodes.front();
  const NodeId v = nodes.back();
  Decomposition dec;
  dec.source = {u, v};
  std::vector<std::uint8_t> large_used(cl.size(), 0);

  const std::size_t last = nodes.size() - 1;
  std::size_t pos = 0;
  do {
    const std::uint32_t i = cl.first_core[nodes[pos]];
    if (i == ~std::uint32_t{0}) throw InternalError("decompose_path: node " + std::to_string(nodes[pos]) + " is in no core");
    std::size_t end = pos;
    if (labels[i] == ClusterLabel::small) {
      while (end < last && cl.in_core(i, nodes[end])) ++end;
    } else {
      while (end < last && cl.in_cluster(i, nodes[end + 1])) ++end;
      if (large_used[i]) throw InternalError("decompose_path: large cluster " + std::to_string(i) + " used twice");
      large_used[i] = 1;
    }
    Subpath sp;
    sp.path.nodes.assign(nodes.begin() + static_cast<std::ptrdiff_t>(pos), nodes.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    sp.cluster = i;
    if (cl.in_cluster(i, u) || cl.in_cluster(i, v))
      sp.cls = SubpathClass::extreme;
    else
      sp.cls = labels[i] == ClusterLabel::large ? SubpathClass::large : SubpathClass::small;
    dec.subpaths.push_back(std::move(sp));
    pos = end;
  } while (pos < last);
  return dec;
}

}  // namespace gsketch
