#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dycla/automaton.hpp"
#include "dycla/diffusion.hpp"
#include "dycla/experiment.hpp"
#include "dycla/graph.hpp"
#include "dycla/rng.hpp"
#include "dycla/seed_set.hpp"

namespace dycla {

struct ClaConfig {
  std::uint32_t k_seeds = 1;
  double delta0 = 0.5;          // initial temporary round threshold
  double delta_inc = 0.25;      // per-round threshold increment
  double threshold = 0.999;     // final convergence threshold
  std::uint32_t resolution = 1;
  double phi = 1.0;             // rewind strength on network variation
  std::uint32_t feedback_sims = 1;       // cascades averaged per feedback
  std::uint32_t delta_sigma_sims = 1000; // cascades per influence-range probe
  std::uint64_t rng_seed = 0;
};

/// Standard parameterization for K seeds: (delta0, delta_inc, threshold) =
/// (1/K, 1/(2K), 0.999) and resolution K. For K = 1 the initial round
/// threshold is capped at the final one, so a single round runs.
inline ClaConfig default_config(std::uint32_t k_seeds, std::uint64_t rng_seed = 0) {
  ClaConfig cfg;
  cfg.k_seeds = k_seeds;
  cfg.delta0 = std::min(1.0 / k_seeds, cfg.threshold);
  cfg.delta_inc = 1.0 / (2.0 * k_seeds);
  cfg.threshold = 0.999;
  cfg.resolution = k_seeds;
  cfg.rng_seed = rng_seed;
  return cfg;
}

/// State of K cooperating automata plus the shared random streams. Copyable
/// and equality-comparable, so reproducibility is testable bit-for-bit.
struct ClaState {
  std::vector<AutomatonState> automata;
  double delta = 0.0;
  std::uint64_t iteration = 0;
  InteractionCounter interactions;
  SeedSet last_seeds;          // empty until the first convergence
  double last_spread = 0.0;
  std::uint64_t last_spread_seed = 0;  // substream behind last_spread
  Rng rng;                     // sequential stream for selection/feedback
  std::uint64_t stream_state = 0;      // source of fresh estimation substreams

  friend bool operator==(const ClaState& a, const ClaState& b) {
    return a.automata == b.automata && a.delta == b.delta &&
           a.iteration == b.iteration &&
           a.interactions.count() == b.interactions.count() &&
           a.last_seeds == b.last_seeds && a.last_spread == b.last_spread &&
           a.last_spread_seed == b.last_spread_seed && a.rng == b.rng &&
           a.stream_state == b.stream_state;
  }
};

/// Invoked after every pursuit update with (iteration, automaton index,
/// probability vector of the updated automaton).
using TraceHook =
    std::function<void(std::uint64_t, std::uint32_t, const std::vector<double>&)>;

namespace detail {

inline void validate_config(const ClaConfig& cfg, std::uint32_t n_vertices) {
  if (cfg.k_seeds < 1 || cfg.k_seeds > n_vertices)
    throw std::invalid_argument("cla: need 1 <= K <= N");
  if (!(cfg.delta0 > 0.0 && cfg.delta0 <= cfg.threshold && cfg.threshold <= 1.0))
    throw std::invalid_argument("cla: need 0 < delta0 <= threshold <= 1");
  if (!(cfg.delta_inc > 0.0))
    throw std::invalid_argument("cla: delta_inc must be > 0");
  if (cfg.resolution < 1)
    throw std::invalid_argument("cla: resolution must be >= 1");
  if (cfg.feedback_sims < 1)
    throw std::invalid_argument("cla: feedback_sims must be >= 1");
  if (cfg.delta_sigma_sims < 1)
    throw std::invalid_argument("cla: delta_sigma_sims must be >= 1");
  if (cfg.phi < 0.0) throw std::invalid_argument("cla: phi must be >= 0");
}

inline std::uint64_t next_stream_seed(ClaState& state) {
  state.stream_state += 0x9e3779b97f4a7c15ULL;
  return mix64(state.stream_state);
}

}  // namespace detail

inline ClaState init_cla(std::uint32_t n_vertices, const ClaConfig& cfg) {
  detail::validate_config(cfg, n_vertices);
  ClaState state;
  state.automata.reserve(cfg.k_seeds);
  for (std::uint32_t k = 0; k < cfg.k_seeds; ++k)
    state.automata.push_back(init_automaton(n_vertices, cfg.resolution));
  state.delta = cfg.delta0;
  state.rng.seed(substream_seed(cfg.rng_seed, 1));
  state.stream_state = substream_seed(cfg.rng_seed, 2);
  return state;
}

/// One interaction: every automaton picks a candidate, the joint
/// (deduplicated) seed set is played against the network, and only
/// automaton k absorbs the feedback.
inline void cla_train_once(const GraphSnapshot& snapshot, const ClaConfig& cfg,
                           ClaState& state, std::uint32_t k,
                           const TraceHook& hook = {}) {
  std::vector<VertexId> picks(cfg.k_seeds);
  for (std::uint32_t j = 0; j < cfg.k_seeds; ++j)
    picks[j] = select_action(state.automata[j], state.rng);
  const SeedSet seeds(picks);

  double feedback = 0.0;
  for (std::uint32_t f = 0; f < cfg.feedback_sims; ++f)
    feedback += simulate_cascade(snapshot, seeds, state.rng, state.interactions);
  feedback /= cfg.feedback_sims;

  edgpa_update(state.automata[k], picks[k], feedback);
  if (hook) hook(state.iteration, k, state.automata[k].p);
  ++state.iteration;
}

/// Trains the K automata on one snapshot until all have converged at the
/// final threshold.
///
/// Learning proceeds in rounds under a temporary threshold delta: within a
/// round each automaton in turn is trained (at least one interaction, the
/// others' states frozen) until its top probability reaches delta; after a
/// full round delta rises by delta_inc, capped at the final threshold, and
/// the round that starts at the cap is the last. Afterwards the converged
/// seed set's spread is estimated with delta_sigma_sims cascades (counted
/// as interactions) and kept as the reference influence range.
inline SeedSet cla_run(const GraphSnapshot& snapshot, const ClaConfig& cfg,
                       ClaState& state, const TraceHook& hook = {},
                       unsigned n_threads = 1) {
  detail::validate_config(cfg, snapshot.n_vertices());
  if (state.automata.size() != cfg.k_seeds ||
      state.automata.front().n_actions() != snapshot.n_vertices())
    throw std::logic_error("cla_run: state does not match snapshot/config");

  state.delta = cfg.delta0;
  for (;;) {
    for (std::uint32_t k = 0; k < cfg.k_seeds; ++k) {
      do {
        cla_train_once(snapshot, cfg, state, k, hook);
      } while (!converged(state.automata[k], state.delta));
    }
    if (state.delta < cfg.threshold)
      state.delta = std::min(state.delta + cfg.delta_inc, cfg.threshold);
    else
      break;
  }

  SeedSet seeds;
  for (const auto& automaton : state.automata)
    seeds.insert(best_action(automaton));

  state.last_spread_seed = detail::next_stream_seed(state);
  const SpreadEstimate est =
      estimate_spread(snapshot, seeds, cfg.delta_sigma_sims,
                      state.last_spread_seed, state.interactions, n_threads);
  state.last_seeds = seeds;
  state.last_spread = est.mean;
  return seeds;
}

/// Variations below this are treated as "network unchanged" and leave the
/// automata bit-identical.
inline constexpr double kDeltaSigmaTolerance = 1e-9;

/// Measures how much the previous seed set's influence range moved on the
/// new snapshot and rewinds the automata proportionally. Returns the
/// measured delta-sigma.
///
/// The probe reuses the exact substreams behind last_spread (common random
/// numbers), so an unchanged snapshot yields delta-sigma == 0 and the
/// static case degenerates exactly. Probe cascades count as interactions.
inline double dycla_absorb_variation(const GraphSnapshot& new_snapshot,
                                     const ClaConfig& cfg, ClaState& state,
                                     unsigned n_threads = 1) {
  if (state.last_seeds.empty())
    throw std::logic_error("dycla: no converged previous result to adapt from");
  const SpreadEstimate est =
      estimate_spread(new_snapshot, state.last_seeds, cfg.delta_sigma_sims,
                      state.last_spread_seed, state.interactions, n_threads);
  const double delta_sigma = std::abs(est.mean - state.last_spread);
  if (delta_sigma > kDeltaSigmaTolerance) {
    for (auto& automaton : state.automata) {
      smooth(automaton, delta_sigma, state.last_spread, est.mean, cfg.phi);
      perturb_estimates(automaton, delta_sigma, state.rng);
    }
  }
  return delta_sigma;
}

/// Adapts to a changed snapshot and re-learns on it, reusing whatever
/// knowledge survived the rewind.
inline SeedSet dycla_step(const GraphSnapshot& new_snapshot,
                          const ClaConfig& cfg, ClaState& state,
                          const TraceHook& hook = {}, unsigned n_threads = 1) {
  dycla_absorb_variation(new_snapshot, cfg, state, n_threads);
  return cla_run(new_snapshot, cfg, state, hook, n_threads);
}

namespace detail {

inline ExperimentRecord make_record(const GraphSnapshot& snapshot,
                                    std::uint32_t t, const char* algorithm,
                                    const SeedSet& seeds,
                                    std::uint64_t interactions,
                                    std::uint64_t report_sims,
                                    std::uint64_t report_seed,
                                    std::uint64_t wall_ms, unsigned n_threads) {
  ExperimentRecord rec;
  rec.snapshot_t = t;
  rec.algorithm = algorithm;
  rec.seeds = seeds;
  InteractionCounter reporting;  // reporting cost is not an interaction
  const SpreadEstimate est = estimate_spread(snapshot, seeds, report_sims,
                                             report_seed, reporting, n_threads);
  rec.spread_mean = est.mean;
  rec.spread_stderr = est.std_error;
  rec.interactions = interactions;
  rec.wall_ms = wall_ms;
  return rec;
}

inline std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
}

}  // namespace detail

/// Dynamic CLA over a whole snapshot series: learn on snapshot 0, then
/// adapt-and-relearn per subsequent snapshot. One record per snapshot; its
/// interaction count covers only that snapshot's work.
inline std::vector<ExperimentRecord> run_temporal(
    const TemporalNetwork& network, const ClaConfig& cfg,
    std::uint64_t report_sims = 10000, const TraceHook& hook = {},
    unsigned n_threads = 1) {
  ClaState state = init_cla(network.n_vertices(), cfg);
  std::vector<ExperimentRecord> records;
  records.reserve(network.size());
  for (std::uint32_t t = 0; t < network.size(); ++t) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t before = state.interactions.count();
    const SeedSet seeds = (t == 0)
                              ? cla_run(network[t], cfg, state, hook, n_threads)
                              : dycla_step(network[t], cfg, state, hook, n_threads);
    const std::uint64_t spent = state.interactions.count() - before;
    records.push_back(detail::make_record(
        network[t], t, "dycla", seeds, spent, report_sims,
        detail::next_stream_seed(state), detail::elapsed_ms(start), n_threads));
  }
  return records;
}

/// Static baseline: a fresh CLA learned from scratch on every snapshot.
inline std::vector<ExperimentRecord> run_temporal_cold(
    const TemporalNetwork& network, const ClaConfig& cfg,
    std::uint64_t report_sims = 10000, const TraceHook& hook = {},
    unsigned n_threads = 1) {
  std::vector<ExperimentRecord> records;
  records.reserve(network.size());
  for (std::uint32_t t = 0; t < network.size(); ++t) {
    const auto start = std::chrono::steady_clock::now();
    ClaConfig snapshot_cfg = cfg;
    snapshot_cfg.rng_seed = substream_seed(cfg.rng_seed, t);
    ClaState state = init_cla(network.n_vertices(), snapshot_cfg);
    const SeedSet seeds = cla_run(network[t], snapshot_cfg, state, hook, n_threads);
    records.push_back(detail::make_record(
        network[t], t, "cla-cold", seeds, state.interactions.count(),
        report_sims, detail::next_stream_seed(state),
        detail::elapsed_ms(start), n_threads));
  }
  return records;
}

}  // namespace dycla
