// io.hpp - plain-text graph, pair-set and node-set files.
//
// Edge list: one "u v" per line, 0-indexed, whitespace separated. Lines whose
// first non-blank character is '#' are comments. An optional "n <count>"
// header fixes the node count; otherwise n = 1 + the largest id seen.
// Pair sets use the same "u v" line shape; node sets hold one id per line.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsketch/graph.hpp"

namespace gsketch::io {

struct EdgeListData {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

/// Parses an edge list. Malformed lines throw std::runtime_error naming the
/// line number.
EdgeListData parse_edge_list(std::istream& in);

Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& file);

/// Writes the "n <count>" header followed by edges in ascending order.
void write_edge_list(std::ostream& out, std::size_t n, std::span<const Edge> edges);
void write_graph(std::ostream& out, const Graph& g);
void write_subgraph(std::ostream& out, const Subgraph& h);

/// Reads pairs for a graph on n nodes; an "n" header line, if present, is
/// ignored.
PairSet read_pairs(std::istream& in, std::size_t n);
PairSet read_pairs(const std::filesystem::path& file, std::size_t n);
void write_pairs(std::ostream& out, const PairSet& pairs);

std::vector<NodeId> read_nodes(std::istream& in, std::size_t n);
std::vector<NodeId> read_nodes(const std::filesystem::path& file, std::size_t n);
void write_nodes(std::ostream& out, std::span<const NodeId> nodes);

/// Writes `content` to `file` (truncating). Throws std::runtime_error on
/// failure.
void write_file(const std::filesystem::path& file, const std::string& content);

}  // namespace gsketch::io
