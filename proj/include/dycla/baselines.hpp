#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "dycla/cla.hpp"
#include "dycla/diffusion.hpp"
#include "dycla/experiment.hpp"
#include "dycla/graph.hpp"
#include "dycla/rng.hpp"
#include "dycla/seed_set.hpp"

namespace dycla {

struct SelectionResult {
  SeedSet seeds;
  std::uint64_t eval_count = 0;  // spread-oracle invocations
};

namespace detail {

inline void check_k(std::uint32_t k, std::uint32_t n_vertices) {
  if (k < 1 || k > n_vertices)
    throw std::invalid_argument("baseline: need 1 <= K <= N");
}

}  // namespace detail

/// Greedy hill climbing: each round evaluates the spread of S + {v} for
/// every remaining v and keeps the argmax, lowest index on ties. `eval`
/// maps a SeedSet to a spread value.
template <typename EvalFn>
SelectionResult greedy_select(std::uint32_t n_vertices, std::uint32_t k,
                              EvalFn&& eval) {
  detail::check_k(k, n_vertices);
  SelectionResult result;
  for (std::uint32_t round = 0; round < k; ++round) {
    VertexId best = 0;
    double best_spread = -1.0;
    for (VertexId v = 0; v < n_vertices; ++v) {
      if (result.seeds.contains(v)) continue;
      SeedSet candidate = result.seeds;
      candidate.insert(v);
      const double spread = eval(candidate);
      ++result.eval_count;
      if (spread > best_spread) {
        best_spread = spread;
        best = v;
      }
    }
    result.seeds.insert(best);
  }
  return result;
}

struct CelfQueueEntry {
  VertexId vertex = 0;
  double marginal_gain = 0.0;
  std::uint32_t last_evaluated_round = 0;
};

/// Lazy greedy. Marginal gains are cached between rounds; a popped entry
/// whose gain is stale is re-evaluated against the accumulated base
/// spread and pushed back, and the top entry is selected once fresh.
/// Submodularity makes cached gains upper bounds, so with a deterministic
/// oracle the output matches greedy_select while never evaluating more.
template <typename EvalFn>
SelectionResult celf_select(std::uint32_t n_vertices, std::uint32_t k,
                            EvalFn&& eval) {
  detail::check_k(k, n_vertices);

  const auto lower_priority = [](const CelfQueueEntry& a, const CelfQueueEntry& b) {
    if (a.marginal_gain != b.marginal_gain)
      return a.marginal_gain < b.marginal_gain;
    return a.vertex > b.vertex;  // lowest index pops first on ties
  };
  std::priority_queue<CelfQueueEntry, std::vector<CelfQueueEntry>,
                      decltype(lower_priority)>
      queue(lower_priority);

  SelectionResult result;
  for (VertexId v = 0; v < n_vertices; ++v) {
    const double gain = eval(SeedSet::single(v));
    ++result.eval_count;
    queue.push({v, gain, 0});
  }

  // base tracks the selected set's spread as the sum of selected gains;
  // with a deterministic oracle the sum telescopes to eval(seeds) exactly.
  double base = 0.0;
  for (std::uint32_t round = 0; round < k; ++round) {
    for (;;) {
      CelfQueueEntry top = queue.top();
      queue.pop();
      if (top.last_evaluated_round == round) {
        result.seeds.insert(top.vertex);
        base += top.marginal_gain;
        break;
      }
      SeedSet candidate = result.seeds;
      candidate.insert(top.vertex);
      top.marginal_gain = eval(candidate) - base;
      ++result.eval_count;
      top.last_evaluated_round = round;
      queue.push(top);
    }
  }
  return result;
}

namespace detail {

/// Monte-Carlo spread oracle; evaluation i runs on its own substream so
/// the whole selection is a pure function of rng_seed.
template <typename Graph>
auto mc_oracle(const Graph& snapshot, std::uint32_t n_sims,
               std::uint64_t rng_seed, InteractionCounter& counter,
               unsigned n_threads) {
  return [&snapshot, n_sims, rng_seed, &counter, n_threads,
          eval_index = std::uint64_t{0}](const SeedSet& seeds) mutable {
    const std::uint64_t stream = substream_seed(rng_seed, eval_index++);
    return estimate_spread(snapshot, seeds, n_sims, stream, counter, n_threads)
        .mean;
  };
}

}  // namespace detail

inline SeedSet naive_greedy(const GraphSnapshot& snapshot, std::uint32_t k,
                            std::uint32_t n_sims, std::uint64_t rng_seed,
                            InteractionCounter& counter,
                            unsigned n_threads = 1) {
  return greedy_select(snapshot.n_vertices(), k,
                       detail::mc_oracle(snapshot, n_sims, rng_seed, counter,
                                         n_threads))
      .seeds;
}

inline SeedSet celf(const GraphSnapshot& snapshot, std::uint32_t k,
                    std::uint32_t n_sims, std::uint64_t rng_seed,
                    InteractionCounter& counter, unsigned n_threads = 1) {
  return celf_select(snapshot.n_vertices(), k,
                     detail::mc_oracle(snapshot, n_sims, rng_seed, counter,
                                       n_threads))
      .seeds;
}

/// K highest out-degree vertices (degree when undirected), lowest index
/// on ties. Costs no spread evaluations.
inline SeedSet top_k_degree(const GraphSnapshot& snapshot, std::uint32_t k) {
  detail::check_k(k, snapshot.n_vertices());
  std::vector<VertexId> order(snapshot.n_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&snapshot](VertexId a, VertexId b) {
    const std::uint32_t da = snapshot.out_degree(a);
    const std::uint32_t db = snapshot.out_degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  order.resize(k);
  return SeedSet(order);
}

/// Runs one static baseline independently on every snapshot. `algorithm`
/// is "greedy", "celf" or "degree"; n_sims is the per-evaluation budget
/// for the two greedy variants.
inline std::vector<ExperimentRecord> run_temporal_baseline(
    const TemporalNetwork& network, const std::string& algorithm,
    std::uint32_t k, std::uint32_t n_sims, std::uint64_t rng_seed,
    std::uint64_t report_sims = 10000, unsigned n_threads = 1) {
  std::vector<ExperimentRecord> records;
  records.reserve(network.size());
  for (std::uint32_t t = 0; t < network.size(); ++t) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t select_seed = substream_seed(rng_seed, 2ULL * t);
    const std::uint64_t report_seed = substream_seed(rng_seed, 2ULL * t + 1);
    InteractionCounter counter;
    SeedSet seeds;
    if (algorithm == "greedy")
      seeds = naive_greedy(network[t], k, n_sims, select_seed, counter, n_threads);
    else if (algorithm == "celf")
      seeds = celf(network[t], k, n_sims, select_seed, counter, n_threads);
    else if (algorithm == "degree")
      seeds = top_k_degree(network[t], k);
    else
      throw std::invalid_argument("unknown baseline: " + algorithm);
    records.push_back(detail::make_record(network[t], t, algorithm.c_str(),
                                          seeds, counter.count(), report_sims,
                                          report_seed,
                                          detail::elapsed_ms(start), n_threads));
  }
  return records;
}

}  // namespace dycla
