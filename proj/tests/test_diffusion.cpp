#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dycla/diffusion.hpp"
#include "test_util.hpp"

using namespace dycla;

namespace {

// directed star: center 0 with three leaves, every activation certain
GraphSnapshot deterministic_star() {
  return GraphSnapshot(4, true, {{0, 1}, {0, 2}, {0, 3}});
}

// 0 -> 1 <- 2 with in_degree(1) = 2; spread({0}) = 1 + 1/2
GraphSnapshot half_graph() {
  return GraphSnapshot(3, true, {{0, 1}, {2, 1}});
}

std::vector<VertexId> all_vertices(std::uint32_t n) {
  std::vector<VertexId> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// non-empty vertex subsets encoded as bitmasks
SeedSet seeds_from_mask(std::uint32_t mask) {
  std::vector<VertexId> members;
  for (std::uint32_t v = 0; v < 32; ++v)
    if (mask >> v & 1) members.push_back(v);
  return SeedSet(std::move(members));
}

}  // namespace

TEST_CASE("activation probability is one over head degree") {
  GraphSnapshot g(5, true, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}});
  REQUIRE(activation_probability(g, {0, 4}) == 0.25);
  REQUIRE(activation_probability(g, {0, 1}) == 1.0);

  GraphSnapshot u(3, false, {{0, 1}, {1, 2}});
  REQUIRE(activation_probability(u, {0, 1}) == 0.5);
  REQUIRE(activation_probability(u, {1, 0}) == 1.0);

  REQUIRE_THROWS_AS(activation_probability(g, {4, 0}), std::logic_error);
}

TEST_CASE("cascade basics") {
  InteractionCounter counter;
  Rng rng(1);

  SECTION("all vertices seeded") {
    GraphSnapshot g(5, true, {{0, 1}, {3, 4}});
    REQUIRE(simulate_cascade(g, SeedSet(all_vertices(5)), rng, counter) == 5);
  }
  SECTION("edgeless graph does not propagate") {
    GraphSnapshot g(3, true, {});
    REQUIRE(simulate_cascade(g, SeedSet::single(1), rng, counter) == 1);
  }
  SECTION("deterministic star always reaches everyone") {
    const GraphSnapshot g = deterministic_star();
    for (int i = 0; i < 50; ++i)
      REQUIRE(simulate_cascade(g, SeedSet::single(0), rng, counter) == 4);
  }
  SECTION("result stays within [seeds, N]") {
    Rng graph_rng(77);
    for (int i = 0; i < 50; ++i) {
      const GraphSnapshot g = test_util::random_graph(graph_rng, 3, 8, 14);
      const SeedSet seeds = seeds_from_mask(
          1 + uniform_below(graph_rng, (1u << g.n_vertices()) - 1));
      const std::uint32_t size = simulate_cascade(g, seeds, rng, counter);
      REQUIRE(size >= seeds.size());
      REQUIRE(size <= g.n_vertices());
    }
  }
  SECTION("empty seed set is rejected") {
    GraphSnapshot g(3, true, {});
    REQUIRE_THROWS_AS(simulate_cascade(g, SeedSet(), rng, counter),
                      std::invalid_argument);
  }
}

TEST_CASE("counter counts every single cascade") {
  const GraphSnapshot g = deterministic_star();
  InteractionCounter counter;
  Rng rng(2);
  simulate_cascade(g, SeedSet::single(0), rng, counter);
  REQUIRE(counter.count() == 1);
  estimate_spread(g, SeedSet::single(0), 10000, 7, counter);
  REQUIRE(counter.count() == 10001);
}

TEST_CASE("spread estimate on deterministic and stochastic graphs") {
  InteractionCounter counter;

  SECTION("deterministic star gives exact mean and zero error") {
    const SpreadEstimate est =
        estimate_spread(deterministic_star(), SeedSet::single(0), 500, 3, counter);
    REQUIRE(est.mean == 4.0);
    REQUIRE(est.std_error == 0.0);
    REQUIRE(est.n_sims == 500);
  }
  SECTION("half graph estimate brackets the exact value 1.5") {
    const GraphSnapshot g = half_graph();
    const SpreadEstimate est =
        estimate_spread(g, SeedSet::single(0), 10000, 4, counter);
    REQUIRE(est.std_error > 0.0);
    REQUIRE(std::abs(est.mean - 1.5) <= 3.0 * est.std_error);
  }
  SECTION("zero simulations are rejected") {
    REQUIRE_THROWS_AS(
        estimate_spread(half_graph(), SeedSet::single(0), 0, 4, counter),
        std::invalid_argument);
  }
}

TEST_CASE("spread estimates are reproducible and thread-independent") {
  Rng graph_rng(123);
  const GraphSnapshot g = test_util::random_graph(graph_rng, 8, 8, 20);
  const SeedSet seeds = SeedSet::single(0);

  InteractionCounter c1, c2, c4;
  const SpreadEstimate serial = estimate_spread(g, seeds, 5000, 99, c1, 1);
  const SpreadEstimate again = estimate_spread(g, seeds, 5000, 99, c2, 1);
  const SpreadEstimate parallel = estimate_spread(g, seeds, 5000, 99, c4, 4);
  REQUIRE(serial.mean == again.mean);
  REQUIRE(serial.std_error == again.std_error);
  REQUIRE(serial.mean == parallel.mean);
  REQUIRE(serial.std_error == parallel.std_error);

  // distinct streams genuinely differ
  const GraphSnapshot coin = half_graph();
  const SpreadEstimate one = estimate_spread(coin, seeds, 5000, 99, c1, 1);
  const SpreadEstimate two = estimate_spread(coin, seeds, 5000, 100, c1, 1);
  REQUIRE(one.mean != two.mean);
}

TEST_CASE("exact spread on the hand-checked graphs") {
  SECTION("edgeless") {
    REQUIRE(exact_spread(GraphSnapshot(3, true, {}), SeedSet::single(2)) == 1.0);
  }
  SECTION("half graph") {
    REQUIRE_THAT(exact_spread(half_graph(), SeedSet::single(0)),
                 Catch::Matchers::WithinAbs(1.5, 1e-12));
  }
  SECTION("all seeded") {
    Rng rng(5);
    const GraphSnapshot g = test_util::random_graph(rng, 4, 6, 10);
    REQUIRE_THAT(exact_spread(g, SeedSet(all_vertices(g.n_vertices()))),
                 Catch::Matchers::WithinAbs(g.n_vertices(), 1e-12));
  }
  SECTION("undirected edge counts as two arcs") {
    // path 0 - 1 - 2: by symmetry spread({1}) = 1 + 1 + ... enumerated: each
    // neighbour activates with probability 1 (degree 1 heads), so 3 exactly
    GraphSnapshot g(3, false, {{0, 1}, {1, 2}});
    REQUIRE_THAT(exact_spread(g, SeedSet::single(1)),
                 Catch::Matchers::WithinAbs(3.0, 1e-12));
    // from an endpoint: centre activates w.p. 1/2, then the far end w.p. 1
    REQUIRE_THAT(exact_spread(g, SeedSet::single(0)),
                 Catch::Matchers::WithinAbs(2.0, 1e-12));
  }
  SECTION("arc budget is enforced") {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 7; ++u)
      for (VertexId v = u + 1; v < 7; ++v)
        if (edges.size() < 21) edges.push_back({u, v});
    GraphSnapshot g(7, true, edges);
    REQUIRE_THROWS_AS(exact_spread(g, SeedSet::single(0)),
                      std::invalid_argument);
  }
}

TEST_CASE("monte carlo estimates agree with the exact oracle") {
  Rng rng(2024);
  InteractionCounter counter;
  for (int i = 0; i < 20; ++i) {
    const bool directed = rng() & 1;
    const GraphSnapshot g =
        test_util::random_graph(rng, 3, 6, directed ? 12 : 9, directed);
    const SeedSet seeds = seeds_from_mask(
        1 + uniform_below(rng, (1u << g.n_vertices()) - 1));
    const double exact = exact_spread(g, seeds);
    const SpreadEstimate est = estimate_spread(g, seeds, 10000, rng(), counter);
    const double slack = est.std_error > 0.0 ? 4.0 * est.std_error : 1e-9;
    REQUIRE(std::abs(est.mean - exact) <= slack);
  }
}

TEST_CASE("exact spread is monotone and submodular on small graphs") {
  Rng rng(31337);
  for (int i = 0; i < 15; ++i) {
    const GraphSnapshot g = test_util::random_graph(rng, 3, 5, 9);
    const std::uint32_t n = g.n_vertices();
    std::vector<double> spread(1u << n, 0.0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
      spread[mask] = exact_spread(g, seeds_from_mask(mask));

    for (std::uint32_t a = 1; a < (1u << n); ++a)
      for (std::uint32_t b = 1; b < (1u << n); ++b) {
        if ((a & b) != a) continue;  // need a subset of b
        REQUIRE(spread[a] <= spread[b] + 1e-12);
        for (std::uint32_t v = 0; v < n; ++v) {
          if (b >> v & 1) continue;
          const double gain_small = spread[a | (1u << v)] - spread[a];
          const double gain_large = spread[b | (1u << v)] - spread[b];
          REQUIRE(gain_large <= gain_small + 1e-12);
        }
      }
  }
}
