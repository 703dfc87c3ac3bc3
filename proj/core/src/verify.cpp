#include "gsketch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

namespace gsketch {

namespace {

struct SourceJob {
  NodeId source;
  /// (demand index, target)
  std::vector<std::pair<std::size_t, NodeId>> targets;
};

struct Outcome {
  Dist dg = kUnreachable;
  Dist dh = kUnreachable;
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

VerifyReport run(const Graph& g, const Subgraph& h, std::span<const NodePair> demands, double budget, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  std::map<NodeId, std::size_t> slot;
  std::vector<SourceJob> jobs;
  for (std::size_t k = 0; k < demands.size(); ++k) {
    const auto [u, v] = demands[k];
    auto [it, fresh] = slot.emplace(u, jobs.size());
    if (fresh) jobs.push_back({u, {}});
    jobs[it->second].targets.emplace_back(k, v);
  }

  std::vector<Outcome> out(demands.size());
  parallel_for(jobs.size(), worker_count(threads, jobs.size()), [&](std::size_t j) {
    const auto dg = bfs_distances(g, jobs[j].source);
    const auto dh = bfs_distances(h, jobs[j].source);
    for (const auto& [k, v] : jobs[j].targets) out[k] = {dg[v], dh[v]};
  });

  VerifyReport rep;
  rep.budget = budget;
  rep.demand_count = demands.size();
  for (std::size_t k = 0; k < demands.size(); ++k) {
    const auto [dg, dh] = out[k];
    if (!reachable(dg)) {
      ++rep.disconnected;
      continue;
    }
    double err, stretch;
    if (!reachable(dh)) {
      err = stretch = std::numeric_limits<double>::infinity();
    } else {
      err = static_cast<double>(dh - dg);
      stretch = dg > 0 ? static_cast<double>(dh) / dg : 1.0;
    }
    rep.max_additive_error = std::max(rep.max_additive_error, err);
    rep.max_multiplicative_stretch = std::max(rep.max_multiplicative_stretch, stretch);
    if (err > budget) rep.violations.push_back({demands[k].first, demands[k].second, dg, dh});
  }
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

VerifyReport verify(const Graph& g, const Subgraph& h, const PairSet& demands, double budget, unsigned threads) {
  if (&h.host() != &g && (h.host().node_count() != g.node_count() ||
                          !std::ranges::equal(h.host().edges(), g.edges())))
    throw std::invalid_argument("verify: H is a subgraph of a different graph");
  return run(g, h, demands.pairs(), budget, threads);
}

VerifyReport verify(const Graph& g, std::span<const Edge> h_edges, const PairSet& demands, double budget,
                    unsigned threads) {
  const auto h = Subgraph::from_edges(g, h_edges);
  return run(g, h, demands.pairs(), budget, threads);
}

VerifyReport verify_all_pairs(const Graph& g, const Subgraph& h, double budget, unsigned threads) {
  std::vector<NodePair> all;
  const auto n = static_cast<NodeId>(g.node_count());
  all.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
  return run(g, h, all, budget, threads);
}

}  // namespace gsketch
