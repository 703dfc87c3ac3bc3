// preserver.hpp - pairwise distance preservers.
//
// naive_preserver takes the union of one shortest path per pair.
// new_preserver inserts the same paths one at a time, but whenever some set W
// of at most K nodes within distance 1 of a node carries T distinct paths, it
// pulls T of those paths out and rebuilds them as a separate choke preserver
// around W (an "auxiliary" preserver). The result is the union of the paths
// still standing (the "leftover" preserver) and all auxiliaries.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsketch/canonical.hpp"
#include "gsketch/graph.hpp"
#include "gsketch/tiebreak.hpp"

namespace gsketch {

enum class Origin : std::uint8_t { naive, leftover, auxiliary };

const char* origin_name(Origin o) noexcept;

struct EdgeProvenance {
  EdgeId edge;
  Origin origin;
  /// Index into Preserver::auxiliaries when origin == auxiliary.
  std::uint32_t aux_index = 0;
};

struct AuxiliaryRecord {
  /// Node whose closed neighborhood held the witness set.
  NodeId fired_at = 0;
  std::vector<NodeId> witness;
  /// Pairs handed to the choke preserver, earliest inserted first.
  PairSet pairs;
  OrientedPathSystem system;
};

struct ProvenanceHistogram {
  std::size_t naive = 0;
  std::size_t leftover = 0;
  std::size_t auxiliary = 0;
};

struct Preserver {
  Subgraph h;
  PairSet pairs;
  /// One entry per edge of h, ascending by edge id. An edge that several
  /// parts share is credited to the leftover preserver first, then to the
  /// lowest-index auxiliary.
  std::vector<EdgeProvenance> provenance;
  std::vector<AuxiliaryRecord> auxiliaries;
  /// Every path that ends up in h: surviving leftover paths, then the paths
  /// of each auxiliary in order.
  OrientedPathSystem system;

  /// Detection parameters actually used (new_preserver only).
  double epsilon = 0.0;
  std::size_t set_size = 0;
  std::size_t path_threshold = 0;

  ProvenanceHistogram histogram() const;
  /// Edges whose provenance is leftover.
  std::size_t leftover_edges() const { return histogram().leftover; }
};

/// Union of canonical shortest paths. Throws NoPathError for a disconnected
/// pair.
Preserver naive_preserver(const Graph& g, const PairSet& pairs);

/// Union of scheme(u, v) over the pairs. Every scheme path must be a shortest
/// u-v path; otherwise std::invalid_argument.
Preserver naive_preserver(const Graph& g, const PairSet& pairs, const PathScheme& scheme);

struct PreserverParams {
  double a = 2.0 / 3.0;
  double b = 2.0 / 3.0;
  /// Unset means automatic: n^eps = |P|^(1/3) if |P| <= n, else
  /// |P|^(2/3) / n^(1/3).
  std::optional<double> epsilon;
  double c_detect = 1.0;

  /// Throws PreconditionError unless 0 < a, b <= 1, 0 <= eps <= 1 and
  /// c_detect > 0.
  void validate() const;
};

/// n^eps under the automatic rule.
double auto_n_eps(std::size_t n, std::size_t pair_count);

/// Witness set bound K = max(1, ceil(c * n^eps)) and path threshold
/// T = max(1, floor(c * n^(2 eps))).
std::size_t detection_set_size(double n_eps, double c_detect);
std::size_t detection_path_threshold(double n_eps, double c_detect);

Preserver new_preserver(const Graph& g, const PairSet& pairs, const PreserverParams& params);

struct Regime {
  double a;
  double b;
};

/// Best known (a, b) for a pair count relative to n:
/// |P| >= n gives (2/3, 2/3), n^(3/4) <= |P| < n gives (1, 1/3), smaller
/// pair sets give (1/2, 1).
Regime select_regime(std::size_t n, std::size_t pair_count);

/// c * (n^a |P|^b + n). Throws PreconditionError for n or p_count < 1 or
/// c <= 0.
double preserver_size_bound(std::size_t n, std::size_t p_count, const PreserverParams& params, double c);

}  // namespace gsketch
