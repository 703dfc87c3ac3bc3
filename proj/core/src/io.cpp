#include "gsketch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsketch::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (j < i) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > 0xFFFFFFFEull) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": expected a node id, got '" +
                             std::string(tok) + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  return in;
}

// Yields the token lists of non-comment, non-blank lines.
template <typename Fn>
void for_each_record(std::istream& in, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    fn(split_ws(body), line_no);
  }
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
  EdgeListData data;
  bool have_header = false;
  std::uint64_t max_id = 0;
  bool any = false;
  for_each_record(in, [&](const std::vector<std::string_view>& tok, std::size_t line_no) {
    if (tok.size() == 2 && tok[0] == "n") {
      if (have_header || any) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": 'n' header must come first and only once");
      }
      data.node_count = parse_uint(tok[1], line_no);
      have_header = true;
      return;
    }
    if (tok.size() != 2) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const auto u = parse_uint(tok[0], line_no);
    const auto v = parse_uint(tok[1], line_no);
    max_id = std::max({max_id, u, v});
    any = true;
    data.edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  });
  if (!have_header) {
    data.node_count = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  } else if (any && max_id >= data.node_count) {
    throw std::runtime_error("edge endpoint " + std::to_string(max_id) +
                             " exceeds header node count " + std::to_string(data.node_count));
  }
  return data;
}

Graph read_graph(std::istream& in) {
  const auto data = parse_edge_list(in);
  return Graph::from_edges(data.node_count, data.edges);
}

Graph read_graph(const std::filesystem::path& file) {
  auto in = open_input(file);
  return read_graph(in);
}

void write_edge_list(std::ostream& out, std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) sorted.push_back(normalized(e.u, e.v));
  std::sort(sorted.begin(), sorted.end());
  out << "n " << n << '\n';
  for (const Edge& e : sorted) out << e.u << ' ' << e.v << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  write_edge_list(out, g.node_count(), g.edges());
}

void write_subgraph(std::ostream& out, const Subgraph& h) {
  const auto edges = h.edge_list();
  write_edge_list(out, h.host().node_count(), edges);
}

PairSet read_pairs(std::istream& in, std::size_t n) {
  std::vector<NodePair> pairs;
  for_each_record(in, [&](const std::vector<std::string_view>& tok, std::size_t line_no) {
    if (tok.size() == 2 && tok[0] == "n") return;
    if (tok.size() != 2) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    pairs.emplace_back(static_cast<NodeId>(parse_uint(tok[0], line_no)),
                       static_cast<NodeId>(parse_uint(tok[1], line_no)));
  });
  return PairSet(n, pairs);
}

PairSet read_pairs(const std::filesystem::path& file, std::size_t n) {
  auto in = open_input(file);
  return read_pairs(in, n);
}

void write_pairs(std::ostream& out, const PairSet& pairs) {
  for (const auto& [u, v] : pairs) out << u << ' ' << v << '\n';
}

std::vector<NodeId> read_nodes(std::istream& in, std::size_t n) {
  std::vector<NodeId> nodes;
  for_each_record(in, [&](const std::vector<std::string_view>& tok, std::size_t line_no) {
    for (auto t : tok) {
      const auto id = parse_uint(t, line_no);
      if (id >= n) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": node " +
                                 std::to_string(id) + " out of range");
      }
      nodes.push_back(static_cast<NodeId>(id));
    }
  });
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::vector<NodeId> read_nodes(const std::filesystem::path& file, std::size_t n) {
  auto in = open_input(file);
  return read_nodes(in, n);
}

void write_nodes(std::ostream& out, std::span<const NodeId> nodes) {
  for (NodeId u : nodes) out << u << '\n';
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace gsketch::io
