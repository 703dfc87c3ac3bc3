#include "gsketch/tiebreak.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "gsketch/errors.hpp"

namespace gsketch {

namespace {

constexpr NodeId kNoNode = ~NodeId{0};

std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

// Index of the first node of q that lies on the path whose positions are
// marked in `position`, or npos.
std::size_t first_meeting(const Path& q, const std::vector<std::int32_t>& position) {
  for (std::size_t t = 0; t < q.nodes.size(); ++t)
    if (position[q.nodes[t]] >= 0) return t;
  return std::string::npos;
}

class PositionMap {
 public:
  explicit PositionMap(std::size_t n) : pos_(n, -1) {}
  void mark(const Path& p) {
    clear();
    marked_ = p.nodes;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) pos_[p.nodes[i]] = static_cast<std::int32_t>(i);
  }
  void clear() {
    for (NodeId u : marked_) pos_[u] = -1;
    marked_.clear();
  }
  const std::vector<std::int32_t>& positions() const { return pos_; }
  std::int32_t operator[](NodeId u) const { return pos_[u]; }

 private:
  std::vector<std::int32_t> pos_;
  std::vector<NodeId> marked_;
};

struct Entry {
  NodeId node;
  std::size_t path_index;
  std::size_t offset;  // index of `node` within the entering path
};

std::vector<Entry> entries_on(const OrientedPathSystem& sys, std::size_t first, std::size_t last,
                              const PositionMap& pos) {
  std::vector<Entry> out;
  for (std::size_t qi = first; qi < last; ++qi) {
    const auto t = first_meeting(sys.paths[qi].path, pos.positions());
    if (t != std::string::npos) out.push_back({sys.paths[qi].path.nodes[t], qi, t});
  }
  return out;
}

std::size_t distinct_nodes(const std::vector<Entry>& entries) {
  std::vector<NodeId> nodes;
  nodes.reserve(entries.size());
  for (const auto& e : entries) nodes.push_back(e.node);
  std::sort(nodes.begin(), nodes.end());
  return static_cast<std::size_t>(std::unique(nodes.begin(), nodes.end()) - nodes.begin());
}

class ChokeBuilder {
 public:
  ChokeBuilder(const Graph& g, const ChokeInput& input) : g_(g), input_(input), paths_(g), pos_(g.node_count()) {}

  OrientedPathSystem run() {
    validate_and_assign();
    for (std::size_t si = 0; si < s_.size(); ++si) {
      const NodeId u = s_[si];
      const std::size_t first = sys_.paths.size();
      for (NodeId x : targets_[si]) {
        sys_.paths.push_back({{u, x}, paths_.path(u, x), u});
        repair(si, first);
      }
    }
    return std::move(sys_);
  }

 private:
  void validate_and_assign() {
    const std::size_t n = g_.node_count();
    if (input_.diameter_bound < 0) throw PreconditionError("choke preserver: negative diameter bound");
    s_ = input_.s_nodes;
    std::sort(s_.begin(), s_.end());
    s_.erase(std::unique(s_.begin(), s_.end()), s_.end());
    for (NodeId s : s_)
      if (s >= n) throw PreconditionError("choke preserver: S node " + std::to_string(s) + " out of range");
    if (s_.empty() && !input_.pairs.empty()) throw PreconditionError("choke preserver: S is empty");

    dist_s_.reserve(s_.size());
    for (NodeId s : s_) dist_s_.push_back(bfs_distances(g_, s));
    for (std::size_t i = 0; i < s_.size(); ++i) {
      for (std::size_t j = i + 1; j < s_.size(); ++j) {
        const Dist d = dist_s_[i][s_[j]];
        if (!reachable(d) || d > input_.diameter_bound) {
          throw PreconditionError("choke preserver: S nodes " + std::to_string(s_[i]) + " and " +
                                  std::to_string(s_[j]) + " are farther apart than " +
                                  std::to_string(input_.diameter_bound));
        }
      }
    }

    targets_.assign(s_.size(), {});
    std::vector<std::set<NodeId>> seen(s_.size());
    for (const auto& [a, b] : input_.pairs) {
      const Dist dab = paths_.distance(a, b);
      if (!reachable(dab)) throw PreconditionError("choke preserver: pair (" + std::to_string(a) + ", " + std::to_string(b) + ") is disconnected");
      std::size_t owner = s_.size();
      for (std::size_t i = 0; i < s_.size(); ++i) {
        const Dist da = dist_s_[i][a];
        const Dist db = dist_s_[i][b];
        if (reachable(da) && reachable(db) && da + db == dab) {
          owner = i;
          break;
        }
      }
      if (owner == s_.size()) {
        throw PreconditionError("choke preserver: pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") has no shortest path through S");
      }
      for (NodeId x : {a, b})
        if (x != s_[owner] && seen[owner].insert(x).second) targets_[owner].push_back(x);
    }
  }

  // Restores the entry bound for owner s_[si], whose paths occupy
  // sys_.paths[first, end).
  void repair(std::size_t si, std::size_t first) {
    const std::size_t limit = 2 * static_cast<std::size_t>(input_.diameter_bound) + 1;
    const std::size_t max_rounds = 16 * (sys_.paths.size() + 1) * (first + 1);
    for (std::size_t round = 0;; ++round) {
      if (round > max_rounds) throw InternalError("choke preserver: rerouting did not converge");
      bool fixed_something = false;
      for (std::size_t pi = 0; pi < first && !fixed_something; ++pi) {
        pos_.mark(sys_.paths[pi].path);
        auto entries = entries_on(sys_, first, sys_.paths.size(), pos_);
        const std::size_t before = distinct_nodes(entries);
        if (before <= limit) continue;
        reroute(si, pi, entries);
        const std::size_t after = distinct_nodes(entries_on(sys_, first, sys_.paths.size(), pos_));
        if (after >= before) throw InternalError("choke preserver: reroute did not reduce entries");
        fixed_something = true;
      }
      pos_.clear();
      if (!fixed_something) return;
    }
  }

  void reroute(std::size_t si, std::size_t pi, const std::vector<Entry>& entries) {
    const Path p = sys_.paths[pi].path;  // copy: sys_ is modified below
    const auto& dist_u = dist_s_[si];

    std::vector<NodeId> nodes;
    for (const auto& e : entries) nodes.push_back(e.node);
    std::sort(nodes.begin(), nodes.end(), [this](NodeId a, NodeId b) { return pos_[a] < pos_[b]; });
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    // p starts at its owner v, so a node's index on p is its distance from v.
    // Offsets dist(u, x) - dist(v, x) lie in [-d, d]; two entries must share one.
    NodeId vj = kNoNode, vk = kNoNode;
    std::map<std::int64_t, NodeId> first_with_offset;
    for (NodeId x : nodes) {
      const std::int64_t off = std::int64_t{dist_u[x]} - pos_[x];
      auto [it, inserted] = first_with_offset.emplace(off, x);
      if (!inserted) {
        vj = it->second;
        vk = x;
        break;
      }
    }
    if (vk == kNoNode) throw InternalError("choke preserver: no pigeonhole pair among entry nodes");

    const Entry* via = nullptr;
    for (const auto& e : entries)
      if (e.node == vj) {
        via = &e;
        break;
      }
    std::vector<NodeId> prefix(sys_.paths[via->path_index].path.nodes.begin(),
                               sys_.paths[via->path_index].path.nodes.begin() +
                                   static_cast<std::ptrdiff_t>(via->offset) + 1);
    for (auto i = pos_[vj] + 1; i <= pos_[vk]; ++i) prefix.push_back(p.nodes[static_cast<std::size_t>(i)]);

    for (const auto& e : entries) {
      if (e.node != vk) continue;
      auto& q = sys_.paths[e.path_index].path;
      if (prefix.size() != e.offset + 1) throw InternalError("choke preserver: reroute would change path length");
      std::vector<NodeId> rebuilt = prefix;
      rebuilt.insert(rebuilt.end(), q.nodes.begin() + static_cast<std::ptrdiff_t>(e.offset) + 1, q.nodes.end());
      q.nodes = std::move(rebuilt);
    }
    ++sys_.reroutes;
  }

  const Graph& g_;
  const ChokeInput& input_;
  CanonicalPaths paths_;
  PositionMap pos_;
  std::vector<NodeId> s_;
  std::vector<std::vector<Dist>> dist_s_;
  std::vector<std::vector<NodeId>> targets_;
  OrientedPathSystem sys_;
};

}  // namespace

Subgraph OrientedPathSystem::edge_union(const Graph& g) const {
  Subgraph h(g);
  for (const auto& op : paths) h.add_path(op.path);
  return h;
}

std::size_t branching_events(const Graph& g, const OrientedPathSystem& sys) {
  std::vector<NodeId> first_tail(g.edge_count(), kNoNode);
  std::vector<std::uint8_t> reversed(g.edge_count(), 0);
  std::vector<std::size_t> indeg(g.node_count(), 0);
  for (const auto& op : sys.paths) {
    const auto& nodes = op.path.nodes;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const NodeId from = nodes[i];
      const NodeId to = nodes[i + 1];
      const auto e = g.find_edge(from, to);
      if (!e) throw std::invalid_argument("branching_events: path uses a non-edge");
      if (first_tail[*e] == kNoNode) {
        first_tail[*e] = from;
        ++indeg[to];
      } else if (first_tail[*e] == to && !reversed[*e]) {
        reversed[*e] = 1;
        ++indeg[to];
      }
    }
  }
  std::size_t b = 0;
  for (std::size_t d : indeg)
    if (d > 1) b += d * (d - 1) / 2;
  return b;
}

BranchBoundReport check_branch_size_bound(const Graph& g, const OrientedPathSystem& sys) {
  BranchBoundReport r;
  r.m = sys.edge_union(g).edge_count();
  r.n = g.node_count();
  r.b = branching_events(g, sys);
  const std::uint64_t slack = ceil_sqrt(2ull * r.b * r.n);
  r.holds = r.m <= r.n + slack;
  return r;
}

OrientedPathSystem choke_preserver(const Graph& g, const ChokeInput& input) {
  return ChokeBuilder(g, input).run();
}

ChokeAudit audit_choke(const Graph& g, const OrientedPathSystem& sys, Dist diameter_bound) {
  ChokeAudit audit;
  std::unordered_map<NodeId, std::vector<Dist>> dist_from;
  for (const auto& op : sys.paths) {
    const auto& nodes = op.path.nodes;
    if (nodes.empty()) {
      audit.all_shortest = false;
      continue;
    }
    bool valid = true;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      if (!g.has_edge(nodes[i], nodes[i + 1])) valid = false;
    auto it = dist_from.find(nodes.front());
    if (it == dist_from.end()) it = dist_from.emplace(nodes.front(), bfs_distances(g, nodes.front())).first;
    if (!valid || it->second[nodes.back()] != static_cast<Dist>(op.path.length())) audit.all_shortest = false;
  }

  // Owners in the order their paths were added.
  std::vector<NodeId> owner_order;
  for (const auto& op : sys.paths)
    if (op.owner && std::find(owner_order.begin(), owner_order.end(), *op.owner) == owner_order.end())
      owner_order.push_back(*op.owner);
  auto rank_of = [&owner_order](NodeId owner) {
    return static_cast<std::size_t>(std::find(owner_order.begin(), owner_order.end(), owner) - owner_order.begin());
  };

  const std::size_t limit = 2 * static_cast<std::size_t>(std::max<Dist>(diameter_bound, 0)) + 1;
  PositionMap pos(g.node_count());
  for (const auto& p : sys.paths) {
    if (!p.owner) continue;
    pos.mark(p.path);
    const std::size_t p_rank = rank_of(*p.owner);
    for (std::size_t r = p_rank + 1; r < owner_order.size(); ++r) {
      std::set<NodeId> entry_nodes;
      for (const auto& q : sys.paths) {
        if (!q.owner || *q.owner != owner_order[r]) continue;
        const auto t = first_meeting(q.path, pos.positions());
        if (t != std::string::npos) entry_nodes.insert(q.path.nodes[t]);
      }
      audit.max_entries = std::max(audit.max_entries, entry_nodes.size());
      if (entry_nodes.size() > limit) ++audit.violations;
    }
  }
  return audit;
}

}  // namespace gsketch
