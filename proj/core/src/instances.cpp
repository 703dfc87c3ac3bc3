#include "gsketch/instances.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gsketch {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Unranks an index of the lexicographic list of pairs (i < j) over k items.
std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t index, std::uint64_t k) {
  std::uint64_t i = 0;
  while (index >= k - 1 - i) {
    index -= k - 1 - i;
    ++i;
  }
  return {i, i + 1 + index};
}

}  // namespace

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest multiple of bound, minus 1
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::uint64_t k) {
  if (k > universe) throw std::invalid_argument("sample_distinct: k exceeds universe");
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(static_cast<std::size_t>(k) * 2);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::uint64_t j = universe - k; j < universe; ++j) {
    const std::uint64_t t = rng.uniform_below(j + 1);
    const std::uint64_t pick = taken.count(t) ? j : t;
    taken.insert(pick);
    out.push_back(pick);
  }
  return out;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Path LayeredInstance::scheme_path(std::uint32_t i, std::uint32_t j) const {
  // step * (layers - 1) == j - i (mod q)
  const std::uint64_t inv = mod_pow((layers - 1) % q, q - 2, q);
  const std::uint64_t step = (static_cast<std::uint64_t>(j) + q - i) % q * inv % q;
  Path p;
  p.nodes.reserve(layers);
  for (std::uint32_t l = 0; l < layers; ++l)
    p.nodes.push_back(node(l, static_cast<std::uint32_t>((i + l * step) % q)));
  return p;
}

PathScheme LayeredInstance::scheme() const {
  std::map<NodePair, std::size_t> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index.emplace(pairs[k], k);
  return [this, index = std::move(index)](NodeId u, NodeId v) {
    if (auto it = index.find({u, v}); it != index.end()) return scheme_paths[it->second];
    if (auto it = index.find({v, u}); it != index.end()) {
      Path p = scheme_paths[it->second];
      std::reverse(p.nodes.begin(), p.nodes.end());
      return p;
    }
    throw std::invalid_argument("layered scheme has no path for (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  };
}

LayeredInstance layered_graph(std::uint32_t q, std::uint32_t layers) {
  if (!is_prime(q)) throw std::invalid_argument("layered_graph: q = " + std::to_string(q) + " is not prime");
  if (layers < 2) throw std::invalid_argument("layered_graph: need at least 2 layers");
  if ((layers - 1) % q == 0)
    throw std::invalid_argument("layered_graph: layers - 1 must not be a multiple of q");
  LayeredInstance inst;
  inst.q = q;
  inst.layers = layers;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(q) * q * (layers - 1));
  for (std::uint32_t l = 0; l + 1 < layers; ++l)
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) edges.push_back({inst.node(l, a), inst.node(l + 1, b)});
  const std::size_t n = static_cast<std::size_t>(q) * layers;
  inst.graph = Graph::from_edges(n, edges);

  std::vector<NodePair> pairs;
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = 0; j < q; ++j) {
      pairs.emplace_back(inst.node(0, i), inst.node(layers - 1, j));
      inst.scheme_paths.push_back(inst.scheme_path(i, j));
    }
  }
  inst.pairs = PairSet(n, pairs);
  return inst;
}

LayeredAudit audit_layered(const LayeredInstance& inst) {
  LayeredAudit audit;
  const Graph& g = inst.graph;
  std::vector<std::uint32_t> edge_owner(g.edge_count(), ~std::uint32_t{0});
  for (std::size_t k = 0; k < inst.scheme_paths.size(); ++k) {
    auto ids = path_edges(g, inst.scheme_paths[k]);
    for (EdgeId e : ids) {
      if (edge_owner[e] == ~std::uint32_t{0}) {
        edge_owner[e] = static_cast<std::uint32_t>(k);
        ++audit.union_edges;
      } else {
        audit.edge_disjoint = false;
      }
    }
  }
  std::vector<std::uint32_t> stamp(g.node_count(), ~std::uint32_t{0});
  for (std::size_t x = 0; x < inst.scheme_paths.size(); ++x) {
    for (NodeId v : inst.scheme_paths[x].nodes) stamp[v] = static_cast<std::uint32_t>(x);
    for (std::size_t y = x + 1; y < inst.scheme_paths.size(); ++y) {
      std::size_t common = 0;
      for (NodeId v : inst.scheme_paths[y].nodes)
        if (stamp[v] == x) ++common;
      audit.pairwise_node_overlap_max = std::max(audit.pairwise_node_overlap_max, common);
    }
  }
  return audit;
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t slots = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > slots) {
    throw std::invalid_argument("random_graph: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                                std::to_string(slots));
  }
  Rng rng(seed);
  auto picks = sample_distinct(rng, slots, m);
  std::sort(picks.begin(), picks.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  // Sweep rows once instead of unranking each index from scratch.
  std::uint64_t row = 0, row_start = 0;
  for (std::uint64_t idx : picks) {
    while (idx >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    edges.push_back({static_cast<NodeId>(row), static_cast<NodeId>(row + 1 + (idx - row_start))});
  }
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t w, std::size_t h) {
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto id = static_cast<NodeId>(y * w + x);
      if (x + 1 < w) edges.push_back({id, id + 1});
      if (y + 1 < h) edges.push_back({id, static_cast<NodeId>(id + w)});
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(normalized(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<NodeId>(i)});
  return Graph::from_edges(n, edges);
}

namespace {

std::vector<std::vector<NodeId>> components(const Graph& g) {
  const auto label = component_labels(g);
  std::map<std::uint32_t, std::vector<NodeId>> by_label;
  for (NodeId v = 0; v < g.node_count(); ++v) by_label[label[v]].push_back(v);
  std::vector<std::vector<NodeId>> out;
  for (auto& [_, members] : by_label) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::uint64_t connected_pair_count(const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& c : components(g)) total += static_cast<std::uint64_t>(c.size()) * (c.size() - 1) / 2;
  return total;
}

PairSet random_pairs(const Graph& g, std::size_t k, std::uint64_t seed) {
  const auto comps = components(g);
  std::vector<std::uint64_t> prefix{0};
  for (const auto& c : comps) prefix.push_back(prefix.back() + static_cast<std::uint64_t>(c.size()) * (c.size() - 1) / 2);
  if (k > prefix.back()) {
    throw std::invalid_argument("random_pairs: k = " + std::to_string(k) + " exceeds the " +
                                std::to_string(prefix.back()) + " connected pairs");
  }
  Rng rng(seed);
  std::vector<NodePair> pairs;
  pairs.reserve(k);
  for (std::uint64_t idx : sample_distinct(rng, prefix.back(), k)) {
    const auto c = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), idx) - prefix.begin() - 1);
    const auto [i, j] = unrank_pair(idx - prefix[c], comps[c].size());
    pairs.emplace_back(comps[c][i], comps[c][j]);
  }
  return PairSet(g.node_count(), pairs);
}

std::vector<NodeId> random_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("random_subset: k exceeds n");
  Rng rng(seed);
  std::vector<NodeId> out;
  for (std::uint64_t v : sample_distinct(rng, n, k)) out.push_back(static_cast<NodeId>(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gsketch
