// canonical.hpp - the canonical consistent tiebreaking scheme.
//
// Edge e gets weight 1 + eps * 2^(rank(e) - m), where rank is the EdgeId
// (lexicographic order). The perturbations of distinct edge sets are distinct
// binary fractions summing to less than one, so every pair of connected nodes
// has exactly one minimum-weight path, and it is a hop-shortest path. Unique
// shortest paths are closed under taking subpaths, which makes the scheme
// consistent. Among hop-shortest paths, the winner is the one whose edge ranks,
// sorted descending, are lexicographically smallest.

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gsketch/graph.hpp"

namespace gsketch {

/// Shortest-path tree of the canonical scheme rooted at `source`.
class CanonicalTree {
 public:
  CanonicalTree(const Graph& g, NodeId source);

  NodeId source() const noexcept { return source_; }
  Dist distance(NodeId v) const { return dist_[v]; }
  const std::vector<Dist>& distances() const noexcept { return dist_; }
  /// Parent on the canonical path back to the source; the source maps to itself.
  NodeId parent(NodeId v) const { return parent_[v]; }

  /// Canonical path from source to target. Throws NoPathError if unreachable.
  Path path_to(NodeId target) const;

 private:
  NodeId source_;
  std::vector<Dist> dist_;
  std::vector<NodeId> parent_;
};

/// Lazily computed canonical trees, one per source. Not thread-safe.
class CanonicalPaths {
 public:
  explicit CanonicalPaths(const Graph& g) : g_(&g), trees_(g.node_count()) {}

  const CanonicalTree& tree(NodeId source);
  Path path(NodeId u, NodeId v) { return tree(u).path_to(v); }
  Dist distance(NodeId u, NodeId v) { return tree(u).distance(v); }

  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
  std::vector<std::unique_ptr<CanonicalTree>> trees_;
};

/// rho_G(u, v) under the canonical scheme. Throws std::invalid_argument for
/// out-of-range nodes and NoPathError for disconnected pairs.
Path canonical_shortest_path(const Graph& g, NodeId u, NodeId v);

/// A tiebreaking scheme: maps a pair to one of its shortest paths, starting at
/// the first node.
using PathScheme = std::function<Path(NodeId, NodeId)>;

}  // namespace gsketch
