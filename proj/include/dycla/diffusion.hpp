#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dycla/graph.hpp"
#include "dycla/rng.hpp"
#include "dycla/seed_set.hpp"

namespace dycla {

struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_sims = 0;
};

/// Counts single-cascade evaluations of the propagation function — the cost
/// metric the harness reports. Updates are atomic; copies take a snapshot.
class InteractionCounter {
 public:
  InteractionCounter() = default;
  InteractionCounter(const InteractionCounter& other) : count_(other.count()) {}
  InteractionCounter& operator=(const InteractionCounter& other) {
    count_.store(other.count(), std::memory_order_relaxed);
    return *this;
  }

  void add(std::uint64_t n = 1) noexcept {
    count_.fetch_add(n, std::memory_order_relaxed);
  }
  std::uint64_t count() const noexcept {
    return count_.load(std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t> count_{0};
};

/// Weighted-cascade probability that edge (u, v) activates v:
/// 1/in-degree(v) in directed graphs, 1/degree(v) in undirected ones.
inline double activation_probability(const GraphSnapshot& g, Edge e) {
  if (!g.has_edge(e.src, e.dst))
    throw std::logic_error("activation_probability: edge not in snapshot");
  return g.directed() ? 1.0 / g.in_degree(e.dst) : 1.0 / g.degree(e.dst);
}

namespace detail {

inline void check_seeds(const GraphSnapshot& g, const SeedSet& seeds) {
  if (seeds.empty())
    throw std::invalid_argument("diffusion: seed set must be non-empty");
  if (seeds.members().back() >= g.n_vertices())
    throw std::invalid_argument("diffusion: seed vertex out of range");
}

/// One cascade realization; returns the number of activated vertices.
inline std::uint32_t run_cascade(const GraphSnapshot& g, const SeedSet& seeds,
                                 Rng& rng) {
  std::vector<char> active(g.n_vertices(), 0);
  std::vector<VertexId> frontier;
  frontier.reserve(seeds.size());
  for (VertexId v : seeds.members()) {
    active[v] = 1;
    frontier.push_back(v);
  }
  std::uint32_t activated = static_cast<std::uint32_t>(frontier.size());
  const bool directed = g.directed();
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId u = frontier[head];
    for (VertexId v : g.out_neighbors(u)) {
      if (active[v]) continue;  // already-active vertices are never re-attempted
      const double p = directed ? 1.0 / g.in_degree(v) : 1.0 / g.degree(v);
      if (uniform01(rng) < p) {
        active[v] = 1;
        frontier.push_back(v);
        ++activated;
      }
    }
  }
  return activated;
}

}  // namespace detail

/// One realization of the weighted cascade from `seeds`. Counts as exactly
/// one interaction with the network.
inline std::uint32_t simulate_cascade(const GraphSnapshot& g,
                                      const SeedSet& seeds, Rng& rng,
                                      InteractionCounter& counter) {
  detail::check_seeds(g, seeds);
  counter.add(1);
  return detail::run_cascade(g, seeds, rng);
}

/// Monte-Carlo spread estimate over n_sims independent cascades. Simulation
/// i always runs on substream i of `stream_seed`, and cascade sizes are
/// accumulated as integers, so the result is bit-identical for any thread
/// count. Adds n_sims to the interaction counter.
inline SpreadEstimate estimate_spread(const GraphSnapshot& g,
                                      const SeedSet& seeds,
                                      std::uint64_t n_sims,
                                      std::uint64_t stream_seed,
                                      InteractionCounter& counter,
                                      unsigned n_threads = 1) {
  if (n_sims == 0)
    throw std::invalid_argument("estimate_spread: n_sims must be positive");
  detail::check_seeds(g, seeds);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end,
                       std::uint64_t& sum, std::uint64_t& sum_sq) {
    std::uint64_t s = 0;
    std::uint64_t s2 = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng(substream_seed(stream_seed, i));
      const std::uint64_t size = detail::run_cascade(g, seeds, rng);
      s += size;
      s2 += size * size;
    }
    sum = s;
    sum_sq = s2;
  };

  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  if (n_threads <= 1 || n_sims < 2 * n_threads) {
    run_range(0, n_sims, sum, sum_sq);
  } else {
    const std::uint64_t n_workers = n_threads;
    std::vector<std::uint64_t> sums(n_workers, 0), sum_sqs(n_workers, 0);
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    const std::uint64_t chunk = (n_sims + n_workers - 1) / n_workers;
    for (std::uint64_t w = 0; w < n_workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(n_sims, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        run_range(begin, end, sums[w], sum_sqs[w]);
      });
    }
    for (auto& t : workers) t.join();
    for (std::uint64_t w = 0; w < n_workers; ++w) {
      sum += sums[w];
      sum_sq += sum_sqs[w];
    }
  }
  counter.add(n_sims);

  SpreadEstimate est;
  est.n_sims = n_sims;
  const double n = static_cast<double>(n_sims);
  est.mean = static_cast<double>(sum) / n;
  if (n_sims > 1) {
    const double variance = std::max(
        0.0, (static_cast<double>(sum_sq) - static_cast<double>(sum) * est.mean) /
                 (n - 1.0));
    est.std_error = std::sqrt(variance / n);
  }
  return est;
}

/// Exact expected spread by enumerating live-edge configurations. Each
/// directed influence arc (one per directed edge, two per undirected edge)
/// is independently live with its activation probability; the spread is the
/// probability-weighted count of vertices reachable from the seeds. The
/// enumeration is bounded at 20 arcs.
inline double exact_spread(const GraphSnapshot& g, const SeedSet& seeds) {
  detail::check_seeds(g, seeds);

  struct Arc {
    VertexId src, dst;
    double p;
  };
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    if (g.directed()) {
      arcs.push_back({e.src, e.dst, 1.0 / g.in_degree(e.dst)});
    } else {
      arcs.push_back({e.src, e.dst, 1.0 / g.degree(e.dst)});
      arcs.push_back({e.dst, e.src, 1.0 / g.degree(e.src)});
    }
  }
  if (arcs.size() > 20)
    throw std::invalid_argument(
        "exact_spread: enumeration bounded at 20 influence arcs");

  const std::uint32_t n_arcs = static_cast<std::uint32_t>(arcs.size());
  std::vector<char> active(g.n_vertices(), 0);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (1ULL << n_arcs); ++mask) {
    double weight = 1.0;
    for (std::uint32_t a = 0; a < n_arcs; ++a)
      weight *= (mask >> a & 1) ? arcs[a].p : 1.0 - arcs[a].p;
    if (weight == 0.0) continue;

    std::fill(active.begin(), active.end(), 0);
    std::uint32_t reached = 0;
    for (VertexId v : seeds.members()) {
      active[v] = 1;
      ++reached;
    }
    // Fixed-point pass over live arcs; at most n_arcs rounds are needed.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < n_arcs; ++a) {
        if (!(mask >> a & 1)) continue;
        if (active[arcs[a].src] && !active[arcs[a].dst]) {
          active[arcs[a].dst] = 1;
          ++reached;
          changed = true;
        }
      }
    }
    total += weight * reached;
  }
  return total;
}

}  // namespace dycla
