// instances.hpp - layered lower-bound graphs, seeded random families and
// demand-set generators.
//
// All randomness goes through Rng (std::mt19937_64 plus an explicit rejection
// sampler), so a seed fixes the output on every platform and standard library.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gsketch/canonical.hpp"
#include "gsketch/graph.hpp"

namespace gsketch {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// k distinct values from [0, universe) by Floyd's algorithm, in the order
/// they were drawn.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::uint64_t k);

bool is_prime(std::uint64_t q);

/// Complete bipartite graphs between consecutive layers of q nodes. Node
/// (layer l, index k) has id l * q + k. The pairs are first layer x last layer
/// in (i, j) order. The scheme path for (i, j) moves by a fixed step
/// s = (j - i) / (layers - 1) mod q per layer, which for layers = q is the
/// rule k -> k + (i - j). Two scheme paths with different steps meet in at
/// most one node and paths with equal steps are disjoint, so the paths are
/// pairwise edge-disjoint.
struct LayeredInstance {
  std::uint32_t q = 0;
  std::uint32_t layers = 0;
  Graph graph;
  PairSet pairs;
  /// Parallel to pairs.
  std::vector<Path> scheme_paths;

  NodeId node(std::uint32_t layer, std::uint32_t index) const { return layer * q + index; }
  /// The scheme path for first-layer index i and last-layer index j.
  Path scheme_path(std::uint32_t i, std::uint32_t j) const;
  /// Looks up scheme paths by pair (either orientation); other pairs throw.
  PathScheme scheme() const;
};

/// Throws std::invalid_argument if q is not prime, layers < 2, or
/// layers - 1 is a multiple of q (the step would be undefined).
LayeredInstance layered_graph(std::uint32_t q, std::uint32_t layers);

struct LayeredAudit {
  std::size_t pairwise_node_overlap_max = 0;
  bool edge_disjoint = true;
  std::size_t union_edges = 0;
};

LayeredAudit audit_layered(const LayeredInstance& inst);

/// Uniform graph with exactly m edges. Throws std::invalid_argument if
/// m > n(n-1)/2.
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);
/// w x h grid; node (x, y) has id y * w + x.
Graph grid_graph(std::size_t w, std::size_t h);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Node 0 joined to 1..n-1.
Graph star_graph(std::size_t n);

/// Number of unordered pairs {u, v} in the same component.
std::uint64_t connected_pair_count(const Graph& g);

/// k distinct connected pairs, oriented (smaller, larger), in draw order.
/// Throws std::invalid_argument if k exceeds connected_pair_count(g).
PairSet random_pairs(const Graph& g, std::size_t k, std::uint64_t seed);

/// k distinct nodes, ascending. Throws std::invalid_argument if k > n.
std::vector<NodeId> random_subset(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace gsketch
