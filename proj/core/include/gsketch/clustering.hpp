// clustering.hpp - padded-core clustering, small/large labels, choke layers
// and path decomposition.
//
// Every node v grows a radius r_v from the base radius r, quadrupling while
// |B(v, 4 r_v)| > L |B(v, r_v)| with L = max(2, ceil(log2 n)). Nodes are then
// taken in descending r_v order (ties by id); each surviving node becomes a
// center with core radius r_i = 2 r_v and deletes every later node u with
// d(u, v) <= r_u + r_v. Cores are B(v_i, r_i), clusters B(v_i, 2 r_i).

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsketch/graph.hpp"

namespace gsketch {

struct Clustering {
  Dist base_radius = 0;
  std::vector<NodeId> centers;
  std::vector<Dist> radii;
  /// Sorted node lists.
  std::vector<std::vector<NodeId>> cores;
  std::vector<std::vector<NodeId>> clusters;
  /// Per node, the smallest index i whose core contains it.
  std::vector<std::uint32_t> first_core;
  /// Most quadrupling steps taken by any node.
  std::size_t max_growth_steps = 0;

  std::size_t size() const noexcept { return centers.size(); }
  bool in_core(std::size_t i, NodeId v) const;
  bool in_cluster(std::size_t i, NodeId v) const;
};

/// max(2, ceil(log2 n)), the growth factor in the stop test.
std::size_t growth_factor(std::size_t n);

/// ceil(log2 n / log2 log2 n), at least 1; r_i <= r * 4^this.
std::size_t growth_exponent(std::size_t n);

/// Throws std::invalid_argument for r < 1.
Clustering build_clustering(const Graph& g, Dist r);

struct BoundParams {
  double a = 2.0 / 3.0;
  double b = 2.0 / 3.0;
  double d = 0.0;
  double E = 1.0;
  double c_large = 1.0;
  double c_choke = 1.0;
  double c_heavy = 1.0;

  /// 2b + a - 1, the shared denominator of every derived exponent.
  double denom() const noexcept { return 2.0 * b + a - 1.0; }
  /// Throws PreconditionError unless denom() > 0, E > 0 and the constants are
  /// positive.
  void validate() const;
};

enum class ClusterLabel : std::uint8_t { small, large };

const char* label_name(ClusterLabel l) noexcept;

/// c_large * r^(2b / k) * E^(1 / k) with k = 2b + a - 1.
double large_threshold(Dist r, const BoundParams& p);

/// Large iff x_size >= large_threshold(r, p); an empty cluster is small.
ClusterLabel classify_cluster(std::size_t x_size, Dist r, const BoundParams& p);

/// Labels every cluster by |X_i| against the clustering's base radius.
std::vector<ClusterLabel> classify_clusters(const Clustering& cl, const BoundParams& p);

struct ChokeLayer {
  Dist radius = 0;
  double ratio = 0.0;
  /// ratio <= c_choke * E. Informational only.
  bool within_bound = false;
};

/// Argmin over r_i < rbar <= 2 r_i of |B<=|^a (|B=|^2)^b / |B<|, smallest
/// radius on ties. Throws std::invalid_argument for r_i < 1.
ChokeLayer find_choke_layer(const Graph& g, NodeId center, Dist r_i, const BoundParams& p);

/// max(1, floor(c_large * r^(2(1-a)/k) * E^(2/k))) with k = 2b + a - 1.
std::size_t large_pair_budget(Dist r, const BoundParams& p);

enum class SubpathClass : std::uint8_t { extreme, small, large };

const char* subpath_class_name(SubpathClass c) noexcept;

struct Subpath {
  Path path;
  SubpathClass cls;
  std::uint32_t cluster;
};

/// Consecutive subpaths share their junction node, so dropping the first node
/// of every subpath after the first and concatenating gives the original path.
struct Decomposition {
  NodePair source;
  std::vector<Subpath> subpaths;

  Path concatenated() const;
};

/// Splits a shortest path. Each piece starts in the lowest-index core that
/// contains its first node. For a small cluster the piece runs to the first
/// node outside the core (inclusive); for a large cluster it runs as far as
/// the path stays inside the cluster. A piece is extreme if its cluster
/// contains either end of the path. Throws InternalError on an uncovered node
/// or a large cluster used twice.
Decomposition decompose_path(const Graph& g, const Path& path, const Clustering& cl,
                             const std::vector<ClusterLabel>& labels);

}  // namespace gsketch
