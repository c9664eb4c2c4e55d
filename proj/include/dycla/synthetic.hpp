#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dycla/graph.hpp"
#include "dycla/rng.hpp"

namespace dycla {

struct SyntheticConfig {
  std::uint32_t n_vertices = 0;
  std::uint32_t n_snapshots = 1;
  double base_edge_prob = 0.01;
  double docile_rewire_frac = 0.02;
  std::vector<std::uint32_t> drastic_steps;  // snapshot indices rewired heavily
  double drastic_rewire_frac = 0.5;
  std::uint64_t rng_seed = 0;
};

namespace detail {

inline std::vector<Edge> rewire(const std::vector<Edge>& edges,
                                std::uint32_t n_vertices, double frac,
                                Rng& rng) {
  const std::size_t n_edges = edges.size();
  const auto n_rewire = static_cast<std::size_t>(
      std::ceil(frac * static_cast<double>(n_edges)));
  if (n_rewire == 0) return edges;

  const std::uint64_t total_pairs =
      static_cast<std::uint64_t>(n_vertices) * (n_vertices - 1);
  if (total_pairs - n_edges < n_rewire)
    throw std::invalid_argument("rewire: not enough non-edges available");

  // Pick n_rewire distinct edges to drop (partial Fisher-Yates).
  std::vector<Edge> pool = edges;
  for (std::size_t i = 0; i < n_rewire; ++i) {
    const std::size_t j =
        i + uniform_below(rng, static_cast<std::uint32_t>(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Edge> kept(pool.begin() + static_cast<std::ptrdiff_t>(n_rewire),
                         pool.end());

  // Replace them with distinct pairs that were not edges before.
  std::set<Edge> occupied(edges.begin(), edges.end());
  std::size_t added = 0;
  while (added < n_rewire) {
    Edge e{uniform_below(rng, n_vertices), uniform_below(rng, n_vertices)};
    if (e.src == e.dst) continue;
    if (!occupied.insert(e).second) continue;
    kept.push_back(e);
    ++added;
  }
  return kept;
}

}  // namespace detail

/// Random dynamic network: snapshot 0 is a directed Erdos-Renyi draw, every
/// later snapshot rewires a fraction of its predecessor's edges (uniformly
/// chosen edges replaced by uniformly chosen non-edges). Snapshots listed in
/// drastic_steps use drastic_rewire_frac instead of the docile fraction.
/// Deterministic given rng_seed.
inline TemporalNetwork generate_synthetic(const SyntheticConfig& cfg) {
  if (cfg.n_vertices < 2)
    throw std::invalid_argument("generate_synthetic: need at least 2 vertices");
  if (cfg.n_snapshots < 1)
    throw std::invalid_argument("generate_synthetic: need at least 1 snapshot");
  auto check_frac = [](double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
      throw std::invalid_argument(std::string("generate_synthetic: ") + name +
                                  " must be in [0, 1]");
  };
  check_frac(cfg.base_edge_prob, "base_edge_prob");
  check_frac(cfg.docile_rewire_frac, "docile_rewire_frac");
  check_frac(cfg.drastic_rewire_frac, "drastic_rewire_frac");

  Rng rng(substream_seed(cfg.rng_seed, 0));
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < cfg.n_vertices; ++u)
    for (std::uint32_t v = 0; v < cfg.n_vertices; ++v)
      if (u != v && uniform01(rng) < cfg.base_edge_prob)
        edges.push_back(Edge{u, v});

  const std::set<std::uint32_t> drastic(cfg.drastic_steps.begin(),
                                        cfg.drastic_steps.end());
  std::vector<GraphSnapshot> snapshots;
  snapshots.emplace_back(cfg.n_vertices, true, edges);
  for (std::uint32_t t = 1; t < cfg.n_snapshots; ++t) {
    const double frac = drastic.contains(t) ? cfg.drastic_rewire_frac
                                            : cfg.docile_rewire_frac;
    edges = detail::rewire(edges, cfg.n_vertices, frac, rng);
    snapshots.emplace_back(cfg.n_vertices, true, edges);
  }
  return TemporalNetwork(std::move(snapshots));
}

}  // namespace dycla
