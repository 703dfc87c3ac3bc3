// tiebreak.hpp - oriented path systems, branching events and the choke
// preserver.
//
// A branching event is a pair of in-arcs entering the same node in the
// oriented union of a path system. Counts here use the orientation the paths
// were built with (each path's edges point away from path.front()), which upper
// bounds the minimum over all orientations.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsketch/canonical.hpp"
#include "gsketch/graph.hpp"

namespace gsketch {

struct OrientedPath {
  NodePair pair;
  /// Oriented away from path.front().
  Path path;
  /// Node of S that owns the path (choke preserver only).
  std::optional<NodeId> owner;
};

struct OrientedPathSystem {
  std::vector<OrientedPath> paths;
  /// Number of reroute operations performed while building the system.
  std::size_t reroutes = 0;

  bool empty() const noexcept { return paths.empty(); }
  std::size_t size() const noexcept { return paths.size(); }

  /// Union of all path edges as a subgraph of g.
  Subgraph edge_union(const Graph& g) const;
};

/// Sum over nodes of C(indeg, 2). An undirected edge contributes one in-arc in
/// the direction of the first path that used it; a later path crossing it the
/// other way contributes one more in-arc at that edge's original tail.
std::size_t branching_events(const Graph& g, const OrientedPathSystem& sys);

struct BranchBoundReport {
  std::size_t m = 0;  // distinct edges in the union
  std::size_t n = 0;  // host node count
  std::size_t b = 0;  // branching events
  bool holds = true;  // m <= n + ceil(sqrt(2 b n))
};

/// Checks the branching-to-size inequality m <= n + ceil(sqrt(2 b n)), which
/// follows from b >= m (m - n) / (2n) by convexity of C(x, 2).
BranchBoundReport check_branch_size_bound(const Graph& g, const OrientedPathSystem& sys);

struct ChokeInput {
  std::vector<NodeId> s_nodes;
  Dist diameter_bound = 0;
  PairSet pairs;
};

/// Builds one shortest path per expanded pair: a pair (a, b) owned by s in S
/// becomes (s, a) and (s, b). Owners are the smallest s on some shortest a-b
/// path and are processed in ascending order. Paths are canonical until a
/// later owner u enters an earlier path p at more than 2d + 1 distinct nodes;
/// then u's paths are rerouted along p until the bound holds again.
///
/// Throws PreconditionError when S has two nodes farther than d apart or a
/// pair has no shortest path through S, and InternalError if rerouting fails
/// to make progress.
OrientedPathSystem choke_preserver(const Graph& g, const ChokeInput& input);

struct ChokeAudit {
  bool all_shortest = true;
  /// Largest number of distinct entry nodes any later owner has on any earlier
  /// path.
  std::size_t max_entries = 0;
  std::size_t violations = 0;  // (path, owner) combinations over 2d + 1
};

/// Re-derives the choke preserver guarantees from the output alone: every path
/// is shortest, and for every path p with owner v and every owner u processed
/// after v, u's paths first meet p at no more than 2d + 1 distinct nodes.
ChokeAudit audit_choke(const Graph& g, const OrientedPathSystem& sys, Dist diameter_bound);

}  // namespace gsketch
