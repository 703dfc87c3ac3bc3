// graph.hpp - immutable undirected unweighted graphs, edge subsets and BFS.
//
// Nodes are 0..n-1. Edges are stored once as (u, v) with u < v and are
// numbered in lexicographic order, so an EdgeId doubles as the edge's rank in
// the canonical tiebreaking order. Adjacency is CSR with sorted neighbors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gsketch {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Hop distance. Unreachable nodes carry kUnreachable, never a large value.
using Dist = std::int32_t;
inline constexpr Dist kUnreachable = -1;

inline constexpr bool reachable(Dist d) noexcept { return d >= 0; }

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orders the endpoints so that u < v.
inline Edge normalized(NodeId a, NodeId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n nodes. Duplicate edges (in either orientation) are
  /// merged; self-loops and out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  /// Edge ids parallel to neighbors(u).
  std::span<const EdgeId> incident_edges(NodeId u) const {
    return {edge_ids_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  bool contains(NodeId u) const noexcept { return u < node_count(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Edge> edges_;
};

/// A simple path given by its node sequence; nodes.front() is where it starts.
struct Path {
  std::vector<NodeId> nodes;

  bool empty() const noexcept { return nodes.empty(); }
  /// Number of edges.
  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Edge ids along a path, in traversal order. Throws std::invalid_argument if
/// two consecutive nodes are not adjacent.
std::vector<EdgeId> path_edges(const Graph& g, const Path& p);

using NodePair = std::pair<NodeId, NodeId>;

/// Demand pairs. Pairs keep their insertion order and orientation; u != v and
/// no pair appears twice in either orientation.
class PairSet {
 public:
  PairSet() = default;
  /// Validates every pair against n. Self-pairs and out-of-range endpoints
  /// throw; repeated pairs are dropped, keeping the first occurrence.
  PairSet(std::size_t n, std::span<const NodePair> pairs);

  /// All unordered pairs {u, v} of `nodes` (ascending, lexicographic).
  static PairSet all_pairs_of(std::size_t n, std::span<const NodeId> nodes);
  static PairSet all_pairs(std::size_t n);

  std::span<const NodePair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const NodePair& operator[](std::size_t i) const { return pairs_[i]; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

 private:
  std::vector<NodePair> pairs_;
};

/// A subset H of a host graph's edges. Holds a pointer to the host, which
/// must outlive it.
class Subgraph {
 public:
  Subgraph() = default;
  explicit Subgraph(const Graph& host) : host_(&host), present_(host.edge_count(), 0) {}

  const Graph& host() const { return *host_; }

  /// Returns true if the edge was not present before.
  bool add(EdgeId e) {
    if (present_[e]) return false;
    present_[e] = 1;
    ++count_;
    return true;
  }
  bool remove(EdgeId e) {
    if (!present_[e]) return false;
    present_[e] = 0;
    --count_;
    return true;
  }
  bool contains(EdgeId e) const { return present_[e] != 0; }
  std::size_t edge_count() const noexcept { return count_; }

  /// Adds every edge of p; returns the ids that were newly added.
  std::vector<EdgeId> add_path(const Path& p);

  /// Present edge ids in ascending order.
  std::vector<EdgeId> edge_ids() const;
  std::vector<Edge> edge_list() const;

  /// Materializes H as a standalone graph on the host's node set.
  Graph to_graph() const;

  /// Builds the subgraph of `host` containing `edges`; throws
  /// std::invalid_argument if some edge is not a host edge.
  static Subgraph from_edges(const Graph& host, std::span<const Edge> edges);

 private:
  const Graph* host_ = nullptr;
  std::vector<std::uint8_t> present_;
  std::size_t count_ = 0;
};

std::vector<Dist> bfs_distances(const Graph& g, NodeId source);
std::vector<Dist> bfs_distances(const Subgraph& h, NodeId source);

/// Distance from the nearest source; sources may be empty.
std::vector<Dist> multi_source_distances(const Graph& g, std::span<const NodeId> sources);

/// delta_H(u, v) if it is at most `limit`, otherwise kUnreachable. Stops the
/// search as soon as the frontier passes `limit`.
Dist bounded_distance(const Subgraph& h, NodeId u, NodeId v, Dist limit);

enum class BallMode { at_most, less_than, exactly };

/// Nodes at distance <= / < / == radius from center, ascending.
std::vector<NodeId> ball(const Graph& g, NodeId center, Dist radius, BallMode mode);

/// Sizes of the exact-distance shells around center up to max_radius:
/// result[k] = |B=(center, k)|.
std::vector<std::size_t> shell_sizes(const Graph& g, NodeId center, Dist max_radius);

/// Connected component label per node, labels numbered by smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g);

/// True iff p is a valid simple path of g whose length equals
/// delta_G(first, last). Invalid adjacency yields false, not an error.
bool is_shortest_path(const Graph& g, const Path& p);

}  // namespace gsketch
