#include "gsketch/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gsketch {

namespace {

void check_node(std::size_t n, NodeId u, const char* what) {
  if (u >= n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(u) +
                                " out of range (n = " + std::to_string(n) + ")");
  }
}

// BFS over the host adjacency, skipping edges rejected by `keep`.
template <typename KeepEdge>
std::vector<Dist> bfs_impl(const Graph& g, NodeId source, KeepEdge keep) {
  check_node(g.node_count(), source, "source");
  std::vector<Dist> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const auto nbrs = g.neighbors(u);
    const auto eids = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId w = nbrs[i];
      if (dist[w] != kUnreachable || !keep(eids[i])) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    check_node(n, e.u, "edge endpoint");
    check_node(n, e.v, "edge endpoint");
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    norm.push_back(normalized(e.u, e.v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.edges_ = std::move(norm);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * g.edges_.size());
  g.edge_ids_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so appending in edge order keeps every
  // adjacency list sorted: for node x, neighbors smaller than x arrive as
  // (w, x) entries in ascending w, before any (x, w) entries.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.targets_[fill[e.u]] = e.v;
    g.edge_ids_[fill[e.u]++] = id;
    g.targets_[fill[e.v]] = e.u;
    g.edge_ids_[fill[e.v]++] = id;
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<EdgeId> path_edges(const Graph& g, const Path& p) {
  std::vector<EdgeId> out;
  if (p.nodes.size() < 2) return out;
  out.reserve(p.nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const auto e = g.find_edge(p.nodes[i], p.nodes[i + 1]);
    if (!e) {
      throw std::invalid_argument("path step " + std::to_string(p.nodes[i]) + "-" +
                                  std::to_string(p.nodes[i + 1]) + " is not an edge");
    }
    out.push_back(*e);
  }
  return out;
}

PairSet::PairSet(std::size_t n, std::span<const NodePair> pairs) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pairs.size() * 2);
  pairs_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    check_node(n, u, "pair endpoint");
    check_node(n, v, "pair endpoint");
    if (u == v) throw std::invalid_argument("pair (" + std::to_string(u) + ", " + std::to_string(u) + ") is not a pair of distinct nodes");
    const Edge key = normalized(u, v);
    if (seen.insert((std::uint64_t{key.u} << 32) | key.v).second) pairs_.emplace_back(u, v);
  }
}

PairSet PairSet::all_pairs_of(std::size_t n, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<NodePair> pairs;
  pairs.reserve(sorted.size() * (sorted.size() > 0 ? sorted.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) pairs.emplace_back(sorted[i], sorted[j]);
  return PairSet(n, pairs);
}

PairSet PairSet::all_pairs(std::size_t n) {
  std::vector<NodeId> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<NodeId>(i);
  return all_pairs_of(n, nodes);
}

std::vector<EdgeId> Subgraph::add_path(const Path& p) {
  std::vector<EdgeId> added;
  for (EdgeId e : path_edges(*host_, p))
    if (add(e)) added.push_back(e);
  return added;
}

std::vector<EdgeId> Subgraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (EdgeId e = 0; e < present_.size(); ++e)
    if (present_[e]) out.push_back(e);
  return out;
}

std::vector<Edge> Subgraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (EdgeId e = 0; e < present_.size(); ++e)
    if (present_[e]) out.push_back(host_->edge(e));
  return out;
}

Graph Subgraph::to_graph() const {
  const auto list = edge_list();
  return Graph::from_edges(host_->node_count(), list);
}

Subgraph Subgraph::from_edges(const Graph& host, std::span<const Edge> edges) {
  Subgraph h(host);
  for (const Edge& e : edges) {
    const auto id = host.find_edge(e.u, e.v);
    if (!id) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not in the host graph");
    }
    h.add(*id);
  }
  return h;
}

std::vector<Dist> bfs_distances(const Graph& g, NodeId source) {
  return bfs_impl(g, source, [](EdgeId) { return true; });
}

std::vector<Dist> bfs_distances(const Subgraph& h, NodeId source) {
  return bfs_impl(h.host(), source, [&h](EdgeId e) { return h.contains(e); });
}

std::vector<Dist> multi_source_distances(const Graph& g, std::span<const NodeId> sources) {
  std::vector<Dist> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  for (NodeId s : sources) {
    check_node(g.node_count(), s, "source");
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Dist bounded_distance(const Subgraph& h, NodeId u, NodeId v, Dist limit) {
  const Graph& g = h.host();
  check_node(g.node_count(), u, "source");
  check_node(g.node_count(), v, "target");
  if (u == v) return 0;
  if (limit <= 0) return kUnreachable;
  // Per-thread visit stamps so repeated short queries do not pay O(n) setup.
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t generation = 0;
  if (stamp.size() < g.node_count()) {
    stamp.assign(g.node_count(), 0);
    generation = 0;
  }
  if (++generation == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    generation = 1;
  }
  std::vector<NodeId> frontier{u}, next;
  stamp[u] = generation;
  for (Dist depth = 1; depth <= limit && !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId x : frontier) {
      const auto nbrs = g.neighbors(x);
      const auto eids = g.incident_edges(x);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!h.contains(eids[i])) continue;
        const NodeId w = nbrs[i];
        if (w == v) return depth;
        if (stamp[w] == generation) continue;
        stamp[w] = generation;
        next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return kUnreachable;
}

std::vector<NodeId> ball(const Graph& g, NodeId center, Dist radius, BallMode mode) {
  check_node(g.node_count(), center, "center");
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  std::vector<NodeId> out;
  // Truncated BFS: nothing beyond `radius` is needed.
  std::vector<Dist> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    if (dist[u] == radius) continue;
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  for (NodeId u : queue) {
    const Dist d = dist[u];
    const bool keep = mode == BallMode::at_most     ? d <= radius
                      : mode == BallMode::less_than ? d < radius
                                                    : d == radius;
    if (keep) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> shell_sizes(const Graph& g, NodeId center, Dist max_radius) {
  check_node(g.node_count(), center, "center");
  std::vector<std::size_t> shells(static_cast<std::size_t>(std::max<Dist>(max_radius, 0)) + 1, 0);
  std::vector<Dist> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    ++shells[static_cast<std::size_t>(dist[u])];
    if (dist[u] == max_radius) continue;
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return shells;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(n, kNone);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    label[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (label[w] != kNone) continue;
        label[w] = s;
        stack.push_back(w);
      }
    }
  }
  return label;
}

bool is_shortest_path(const Graph& g, const Path& p) {
  if (p.nodes.empty()) return false;
  for (NodeId u : p.nodes)
    if (!g.contains(u)) return false;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i)
    if (!g.has_edge(p.nodes[i], p.nodes[i + 1])) return false;
  const auto dist = bfs_distances(g, p.front());
  return dist[p.back()] == static_cast<Dist>(p.length());
}

}  // namespace gsketch
