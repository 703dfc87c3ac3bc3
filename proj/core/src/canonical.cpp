#include "gsketch/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gsketch/errors.hpp"

namespace gsketch {

namespace {

// Labels are the edge ranks of a path sorted descending. A candidate label is
// a parent's label with one more rank inserted; compare it against the best
// label so far without materializing it.
bool extended_less(const std::vector<EdgeId>& base, EdgeId extra,
                   const std::vector<EdgeId>& best) {
  std::size_t i = 0;
  bool inserted = false;
  for (std::size_t k = 0; k < best.size(); ++k) {
    EdgeId cand;
    if (!inserted && (i == base.size() || extra > base[i])) {
      cand = extra;
      inserted = true;
    } else {
      cand = base[i++];
    }
    if (cand != best[k]) return cand < best[k];
  }
  return false;
}

std::vector<EdgeId> extended(const std::vector<EdgeId>& base, EdgeId extra) {
  std::vector<EdgeId> out;
  out.reserve(base.size() + 1);
  auto pos = std::lower_bound(base.begin(), base.end(), extra, std::greater<>{});
  out.insert(out.end(), base.begin(), pos);
  out.push_back(extra);
  out.insert(out.end(), pos, base.end());
  return out;
}

}  // namespace

CanonicalTree::CanonicalTree(const Graph& g, NodeId source)
    : source_(source), dist_(bfs_distances(g, source)), parent_(g.node_count(), source) {
  std::vector<std::vector<NodeId>> layers;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!reachable(dist_[v])) continue;
    const auto d = static_cast<std::size_t>(dist_[v]);
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].push_back(v);
  }

  // Only the previous layer's labels are live at any time.
  std::vector<std::vector<EdgeId>> label(g.node_count());
  std::vector<EdgeId> best;
  for (std::size_t d = 1; d < layers.size(); ++d) {
    for (NodeId v : layers[d]) {
      const auto nbrs = g.neighbors(v);
      const auto eids = g.incident_edges(v);
      bool have = false;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const NodeId p = nbrs[i];
        if (dist_[p] != dist_[v] - 1) continue;
        if (!have || extended_less(label[p], eids[i], best)) {
          best = extended(label[p], eids[i]);
          parent_[v] = p;
          have = true;
        }
      }
      label[v] = best;
    }
    for (NodeId u : layers[d - 1]) std::vector<EdgeId>().swap(label[u]);
  }
}

Path CanonicalTree::path_to(NodeId target) const {
  if (target >= dist_.size()) {
    throw std::invalid_argument("target " + std::to_string(target) + " out of range");
  }
  if (!reachable(dist_[target])) throw NoPathError(source_, target);
  Path p;
  p.nodes.resize(static_cast<std::size_t>(dist_[target]) + 1);
  NodeId cur = target;
  for (std::size_t i = p.nodes.size(); i-- > 0;) {
    p.nodes[i] = cur;
    cur = parent_[cur];
  }
  return p;
}

const CanonicalTree& CanonicalPaths::tree(NodeId source) {
  if (source >= trees_.size()) {
    throw std::invalid_argument("source " + std::to_string(source) + " out of range");
  }
  auto& slot = trees_[source];
  if (!slot) slot = std::make_unique<CanonicalTree>(*g_, source);
  return *slot;
}

Path canonical_shortest_path(const Graph& g, NodeId u, NodeId v) {
  if (u >= g.node_count() || v >= g.node_count()) {
    throw std::invalid_argument("canonical_shortest_path: node out of range");
  }
  return CanonicalTree(g, u).path_to(v);
}

}  // namespace gsketch
