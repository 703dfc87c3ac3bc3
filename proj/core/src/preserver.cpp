#include "gsketch/preserver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsketch/errors.hpp"

namespace gsketch {

namespace {

// Guards ceil/floor of powers that should land on an integer.
constexpr double kRoundSlack = 1e-9;

std::vector<EdgeProvenance> uniform_provenance(const Subgraph& h, Origin origin) {
  std::vector<EdgeProvenance> out;
  for (EdgeId e : h.edge_ids()) out.push_back({e, origin, 0});
  return out;
}

class NewPreserverBuilder {
 public:
  NewPreserverBuilder(const Graph& g, const PairSet& pairs, const PreserverParams& params)
      : g_(g), pairs_(pairs), paths_(g), refcount_(g.edge_count(), 0), through_(g.node_count()),
        counter_(g.node_count(), 0) {
    params.validate();
    const std::size_t n = std::max<std::size_t>(g.node_count(), 1);
    const double n_eps = params.epsilon ? std::pow(static_cast<double>(n), *params.epsilon)
                                        : auto_n_eps(n, pairs.size());
    epsilon_ = n > 1 ? std::log(n_eps) / std::log(static_cast<double>(n)) : 0.0;
    k_ = detection_set_size(n_eps, params.c_detect);
    if (params.epsilon) {
      // Take n^(2 eps) directly so that e.g. n = 20, eps = 1/2 gives exactly 20.
      const double v = params.c_detect * std::pow(static_cast<double>(n), 2.0 * *params.epsilon);
      t_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(v + kRoundSlack)));
    } else {
      t_ = detection_path_threshold(n_eps, params.c_detect);
    }
  }

  Preserver run() {
    for (const auto& [a, b] : pairs_) {
      if (!reachable(paths_.distance(a, b))) throw NoPathError(a, b);
      insert({a, b}, paths_.path(a, b));
      detect();
    }
    return finish();
  }

 private:
  struct Live {
    NodePair pair;
    Path path;
    bool alive = true;
  };

  void insert(NodePair pair, Path path) {
    const auto id = static_cast<std::uint32_t>(live_.size());
    for (EdgeId e : path_edges(g_, path)) ++refcount_[e];
    for (NodeId v : path.nodes) {
      ++counter_[v];
      through_[v].push_back(id);
    }
    last_ = path.nodes;
    live_.push_back({pair, std::move(path), true});
  }

  void remove(std::uint32_t id) {
    auto& lp = live_[id];
    lp.alive = false;
    for (EdgeId e : path_edges(g_, lp.path)) --refcount_[e];
    for (NodeId v : lp.path.nodes) --counter_[v];
  }

  // Nodes within distance 1 of the last inserted path, ascending.
  std::vector<NodeId> candidates() const {
    std::vector<NodeId> out;
    for (NodeId v : last_) {
      out.push_back(v);
      for (NodeId w : g_.neighbors(v)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Top-k counters over the closed neighborhood of u, ties by id.
  std::vector<NodeId> witness_at(NodeId u) const {
    std::vector<NodeId> nb{u};
    for (NodeId w : g_.neighbors(u)) nb.push_back(w);
    std::sort(nb.begin(), nb.end(), [this](NodeId x, NodeId y) {
      return counter_[x] != counter_[y] ? counter_[x] > counter_[y] : x < y;
    });
    std::vector<NodeId> w;
    for (NodeId x : nb) {
      if (w.size() == k_ || counter_[x] == 0) break;
      w.push_back(x);
    }
    return w;
  }

  std::vector<std::uint32_t> live_paths_through(const std::vector<NodeId>& w) const {
    std::vector<std::uint32_t> ids;
    for (NodeId x : w)
      for (auto id : through_[x])
        if (live_[id].alive) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  void detect() {
    const auto cand = candidates();
    for (bool fired = true; fired;) {
      fired = false;
      for (NodeId u : cand) {
        const auto w = witness_at(u);
        std::size_t upper = 0;
        for (NodeId x : w) upper += counter_[x];
        if (upper < t_) continue;
        const auto ids = live_paths_through(w);
        if (ids.size() < t_) continue;
        fire(u, w, std::vector<std::uint32_t>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(t_)));
        fired = true;
        break;
      }
    }
  }

  void fire(NodeId u, std::vector<NodeId> w, const std::vector<std::uint32_t>& ids) {
    std::vector<NodePair> taken;
    for (auto id : ids) {
      taken.push_back(live_[id].pair);
      remove(id);
    }
    std::sort(w.begin(), w.end());
    AuxiliaryRecord rec;
    rec.fired_at = u;
    rec.witness = w;
    rec.pairs = PairSet(g_.node_count(), taken);
    rec.system = choke_preserver(g_, ChokeInput{w, 2, rec.pairs});
    aux_.push_back(std::move(rec));
  }

  Preserver finish() {
    Preserver out;
    out.h = Subgraph(g_);
    out.pairs = pairs_;
    out.epsilon = epsilon_;
    out.set_size = k_;
    out.path_threshold = t_;

    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    constexpr std::uint32_t kLeftover = kNone - 1;
    std::vector<std::uint32_t> tag(g_.edge_count(), kNone);
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (refcount_[e] > 0) tag[e] = kLeftover;
    for (const auto& lp : live_)
      if (lp.alive) out.system.paths.push_back({lp.pair, lp.path, std::nullopt});
    for (std::size_t k = 0; k < aux_.size(); ++k) {
      for (const auto& op : aux_[k].system.paths) {
        for (EdgeId e : path_edges(g_, op.path))
          if (tag[e] == kNone) tag[e] = static_cast<std::uint32_t>(k);
        out.system.paths.push_back(op);
      }
      out.system.reroutes += aux_[k].system.reroutes;
    }
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (tag[e] == kNone) continue;
      out.h.add(e);
      if (tag[e] == kLeftover)
        out.provenance.push_back({e, Origin::leftover, 0});
      else
        out.provenance.push_back({e, Origin::auxiliary, tag[e]});
    }
    out.auxiliaries = std::move(aux_);
    return out;
  }

  const Graph& g_;
  const PairSet& pairs_;
  CanonicalPaths paths_;
  std::vector<std::uint32_t> refcount_;
  std::vector<std::vector<std::uint32_t>> through_;
  std::vector<std::size_t> counter_;
  std::vector<Live> live_;
  std::vector<NodeId> last_;
  std::vector<AuxiliaryRecord> aux_;
  double epsilon_ = 0.0;
  std::size_t k_ = 1;
  std::size_t t_ = 1;
};

}  // namespace

const char* origin_name(Origin o) noexcept {
  switch (o) {
    case Origin::naive: return "naive";
    case Origin::leftover: return "leftover";
    case Origin::auxiliary: return "auxiliary";
  }
  return "?";
}

ProvenanceHistogram Preserver::histogram() const {
  ProvenanceHistogram hist;
  for (const auto& p : provenance) {
    switch (p.origin) {
      case Origin::naive: ++hist.naive; break;
      case Origin::leftover: ++hist.leftover; break;
      case Origin::auxiliary: ++hist.auxiliary; break;
    }
  }
  return hist;
}

Preserver naive_preserver(const Graph& g, const PairSet& pairs) {
  CanonicalPaths paths(g);
  return naive_preserver(g, pairs, [&paths](NodeId u, NodeId v) {
    if (!reachable(paths.distance(u, v))) throw NoPathError(u, v);
    return paths.path(u, v);
  });
}

Preserver naive_preserver(const Graph& g, const PairSet& pairs, const PathScheme& scheme) {
  Preserver out;
  out.h = Subgraph(g);
  out.pairs = pairs;
  for (const auto& [u, v] : pairs) {
    Path p = scheme(u, v);
    if (p.empty() || p.front() != u || p.back() != v || !is_shortest_path(g, p)) {
      throw std::invalid_argument("scheme path for (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not a shortest path");
    }
    out.h.add_path(p);
    out.system.paths.push_back({{u, v}, std::move(p), std::nullopt});
  }
  out.provenance = uniform_provenance(out.h, Origin::naive);
  return out;
}

void PreserverParams::validate() const {
  if (!(a > 0.0 && a <= 1.0) || !(b > 0.0 && b <= 1.0))
    throw PreconditionError("preserver exponents a, b must lie in (0, 1]");
  if (epsilon && !(*epsilon >= 0.0 && *epsilon <= 1.0))
    throw PreconditionError("epsilon must lie in [0, 1]");
  if (!(c_detect > 0.0)) throw PreconditionError("c_detect must be positive");
}

double auto_n_eps(std::size_t n, std::size_t pair_count) {
  const double p = static_cast<double>(std::max<std::size_t>(pair_count, 1));
  if (pair_count <= n) return std::cbrt(p);
  return std::pow(p, 2.0 / 3.0) / std::cbrt(static_cast<double>(n));
}

std::size_t detection_set_size(double n_eps, double c_detect) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(c_detect * n_eps - kRoundSlack)));
}

std::size_t detection_path_threshold(double n_eps, double c_detect) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(c_detect * n_eps * n_eps + kRoundSlack)));
}

Preserver new_preserver(const Graph& g, const PairSet& pairs, const PreserverParams& params) {
  return NewPreserverBuilder(g, pairs, params).run();
}

Regime select_regime(std::size_t n, std::size_t pair_count) {
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(pair_count);
  if (p >= nn) return {2.0 / 3.0, 2.0 / 3.0};
  if (p >= std::pow(nn, 0.75)) return {1.0, 1.0 / 3.0};
  return {0.5, 1.0};
}

double preserver_size_bound(std::size_t n, std::size_t p_count, const PreserverParams& params, double c) {
  if (n < 1 || p_count < 1 || !(c > 0.0)) throw PreconditionError("preserver_size_bound: need n, |P| >= 1 and c > 0");
  const double nn = static_cast<double>(n);
  return c * (std::pow(nn, params.a) * std::pow(static_cast<double>(p_count), params.b) + nn);
}

}  // namespace gsketch
