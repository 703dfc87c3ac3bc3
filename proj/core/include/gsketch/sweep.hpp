// sweep.hpp - parameter sweeps over instance families, reported as CSV.
//
// One row per (size, seed, algorithm, parameter) cell. Columns, in order:
//   family, size, n, m, algo, a, b, param, seed, demands, h_edges, max_error,
//   violations, bound, ratio, extreme, small, large, heavy, light
// size is q for layered instances, n for random graphs and the side length
// for grids. param is |P| for preserver algorithms (0 = every available
// pair for layered instances) and d for spanners. ratio = h_edges / bound.
// Rows carry no timing, so a fixed spec always yields the same bytes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsketch/constants.hpp"
#include "gsketch/preserver.hpp"
#include "gsketch/spanner.hpp"

namespace gsketch {

enum class Family : std::uint8_t { layered, random, grid };
enum class SweepAlgo : std::uint8_t { naive, fresh, subset, standard };

const char* family_name(Family f) noexcept;
/// "naive", "new", "subset", "standard".
const char* algo_name(SweepAlgo a) noexcept;
/// Throw std::invalid_argument on unknown names.
Family parse_family(const std::string& s);
SweepAlgo parse_algo(const std::string& s);

struct SweepSpec {
  Family family = Family::random;
  std::vector<std::size_t> sizes;
  std::vector<double> params;
  std::vector<SweepAlgo> algos;
  /// Unset: select_regime per cell for preservers, (2/3, 2/3) for spanners.
  std::optional<Regime> ab;
  std::uint64_t seed = 0;
  /// Seeds seed, seed + 1, ..., seed + seeds - 1.
  std::size_t seeds = 1;
  /// Random family edge count m = round(density * n), capped at n(n-1)/2.
  double density = 4.0;
  /// Subset spanner |S|; 0 means ceil(sqrt(n)).
  std::size_t subset_size = 0;
  /// Largest n any cell may have.
  std::size_t cap = 2000;
  Constants consts;
  /// Worker threads over cells; 0 = hardware concurrency.
  unsigned threads = 0;

  /// Throws std::invalid_argument on empty grids, bad sizes (e.g. composite
  /// q) or any cell over the cap.
  void validate() const;
};

struct SweepRow {
  std::string family;
  std::size_t size = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algo;
  double a = 0.0;
  double b = 0.0;
  double param = 0.0;
  std::uint64_t seed = 0;
  std::size_t demands = 0;
  std::size_t h_edges = 0;
  double max_error = 0.0;
  std::size_t violations = 0;
  double bound = 0.0;
  double ratio = 0.0;
  std::size_t extreme = 0;
  std::size_t small = 0;
  std::size_t large = 0;
  std::size_t heavy = 0;
  std::size_t light = 0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Metrics for one preserver: budget-0 verification over its pairs and the
/// c = 1 size bound for ab. Instance columns (family, size, seed) are left
/// for the caller.
SweepRow preserver_row(const Graph& g, const Preserver& pres, Regime ab, unsigned threads = 0);

/// Metrics for a subset or standard spanner built with exponent d: subset
/// spanners are verified on S x S against n^d, standard spanners on all
/// pairs against their beta_target. Added edges are classified over a
/// clustering of radius classification_radius(n, d).
SweepRow spanner_row(const Graph& g, const SpannerResult& r, double d, Regime ab, const Constants& c,
                     unsigned threads = 0);

const std::vector<std::string>& csv_header();
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Parses what write_csv produced. Throws std::runtime_error on a header or
/// field mismatch.
std::vector<SweepRow> read_csv(std::istream& in);

/// Number formatting used in every CSV cell: %.6g, "inf" for infinity.
std::string format_number(double v);

}  // namespace gsketch
