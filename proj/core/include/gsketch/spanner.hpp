// spanner.hpp - greedy multiplicative spanners, subset spanners and standard
// additive spanners, with a log of every shortest path the constructions add.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gsketch/clustering.hpp"
#include "gsketch/graph.hpp"

namespace gsketch {

enum class SpannerKind : std::uint8_t { multiplicative, subset, standard };

const char* spanner_kind_name(SpannerKind k) noexcept;

enum class AdditionPhase : std::uint8_t {
  subset,  // a subset-spanner pair path
  prefix,  // rho(u, x_u)
  suffix,  // rho(v, x_v)
  whole,   // rho(u, v) when no node of it is near the sample
};

const char* addition_phase_name(AdditionPhase p) noexcept;

struct PathAddition {
  AdditionPhase phase;
  /// The pair whose check triggered the addition.
  NodePair trigger;
  /// The path added, oriented away from its trigger endpoint.
  Path path;
  /// Edges this addition put into H, in path order.
  std::vector<EdgeId> new_edges;
};

struct SpannerResult {
  SpannerKind kind = SpannerKind::multiplicative;
  Subgraph h;
  /// Stretch of the multiplicative base.
  int stretch = 0;
  /// Additive error the construction certifies (0 for multiplicative).
  double beta_target = 0.0;
  std::size_t mult_edges = 0;
  std::size_t subset_edges = 0;
  std::size_t path_edges = 0;
  /// Subset nodes (the sample for standard spanners), ascending.
  std::vector<NodeId> subset;
  bool has_log = false;
  std::vector<PathAddition> log;
};

/// max(3, 2 ceil(log2 n / 2) - 1): odd and at most log2 n + 1.
int default_stretch(std::size_t n);

/// Greedy: edges in id order, each added iff delta_H(u, v) > t at that point.
/// Throws std::invalid_argument for t < 1.
SpannerResult multiplicative_spanner(const Graph& g, int t);

/// Starts from multiplicative_spanner(g, default_stretch(n)), then for every
/// pair of S in lexicographic order adds the canonical s1-s2 path whenever
/// delta_H > delta_G + n^d. Disconnected pairs are skipped.
SpannerResult subset_spanner(const Graph& g, std::span<const NodeId> s, double d);

struct StandardParams {
  double d = 0.3;
  double a = 2.0 / 3.0;
  double b = 2.0 / 3.0;
  double c_sample = 2.0;
  double c_err = 8.0;
  std::uint64_t seed = 0;

  /// n^((a+2b-1)/(a+2b+1) - d(10b-a+1)/(3(a+2b+1))).
  double density_target(std::size_t n) const;
  /// ceil(c_sample log2 n n^(1 - d(2b-a+1)/k) / E^((3-2b-a)/k)), k = 2b+a-1,
  /// clamped to [1, n].
  std::size_t sample_size(std::size_t n) const;
  /// Throws PreconditionError on d < 0, 2b + a - 1 <= 0 or nonpositive
  /// constants.
  void validate() const;
};

/// Multiplicative base, then a +n^d subset spanner on a seeded sample S,
/// then for every pair u < v with delta_H > delta_G + c_err n^d adds
/// rho(u, x_u) and rho(v, x_v), where x_u / x_v are the first / last nodes of
/// rho(u, v) within n^d / log2 n of S. If no node qualifies the whole path is
/// added. Throws PreconditionError for n < 2.
SpannerResult standard_spanner(const Graph& g, const StandardParams& sp);

struct EdgeClassStats {
  std::size_t extreme = 0;
  std::size_t small = 0;
  std::size_t large = 0;
  std::size_t heavy = 0;
  std::size_t light = 0;
  std::size_t total = 0;
};

/// c_heavy * |X|^((b+a-1)/b) * E^((b-1)/b).
double heavy_threshold(std::size_t x_size, const BoundParams& p);

/// Decomposes every logged addition over cl and credits each new edge to the
/// class of the subpath containing it; large subpaths whose new-edge count
/// reaches heavy_threshold are heavy. Throws std::invalid_argument if the
/// result carries no log.
EdgeClassStats classify_added_edges(const SpannerResult& result, const Clustering& cl, const BoundParams& p);

/// Clustering radius max(1, floor(n^d / (8 log2 n 4^growth_exponent(n)))),
/// small enough that every r_i <= n^d / (8 log2 n).
Dist classification_radius(std::size_t n, double d);

/// Edges of path not in h_edges.
std::size_t missing_edges(const Graph& g, const Subgraph& h, const Path& path);

/// n + |S|^((2b+a-1)/2) n^(1 - d(1-a)).
double subset_size_bound(std::size_t n, std::size_t s_count, double a, double b, double d);
/// n^(1 + (a+2b-1)/(a+2b+1) - d(10b-a+1)/(3(a+2b+1))).
double standard_size_bound(std::size_t n, double a, double b, double d);

}  // namespace gsketch
