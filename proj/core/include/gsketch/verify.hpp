// verify.hpp - exact BFS oracle comparing distances in H against G.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsketch/graph.hpp"

namespace gsketch {

struct Violation {
  NodeId u;
  NodeId v;
  Dist dist_g;
  /// kUnreachable if H disconnects the pair.
  Dist dist_h;
};

struct VerifyReport {
  std::size_t demand_count = 0;
  /// Demands disconnected in G; they are skipped.
  std::size_t disconnected = 0;
  /// Infinite if H disconnects a demand that G connects.
  double max_additive_error = 0.0;
  double max_multiplicative_stretch = 1.0;
  double budget = 0.0;
  /// Demands whose error exceeds the budget, in demand order.
  std::vector<Violation> violations;
  double runtime_seconds = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Runs one BFS per distinct demand source on G and on H, spread over
/// `threads` workers (0 = hardware concurrency). The report does not depend
/// on the thread count apart from runtime_seconds.
VerifyReport verify(const Graph& g, const Subgraph& h, const PairSet& demands, double budget, unsigned threads = 0);

/// As above for an explicit edge list; edges outside G throw
/// std::invalid_argument.
VerifyReport verify(const Graph& g, std::span<const Edge> h_edges, const PairSet& demands, double budget,
                    unsigned threads = 0);

/// Every unordered pair of nodes as demands.
VerifyReport verify_all_pairs(const Graph& g, const Subgraph& h, double budget, unsigned threads = 0);

}  // namespace gsketch
