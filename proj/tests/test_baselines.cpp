#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "dycla/baselines.hpp"
#include "dycla/synthetic.hpp"
#include "test_util.hpp"

using namespace dycla;

namespace {

GraphSnapshot star4() { return GraphSnapshot(4, true, {{0, 1}, {0, 2}, {0, 3}}); }

// exact oracle shared by greedy and celf comparisons
auto exact_oracle(const GraphSnapshot& g) {
  return [&g](const SeedSet& seeds) { return exact_spread(g, seeds); };
}

std::uint64_t greedy_eval_count(std::uint32_t n, std::uint32_t k) {
  std::uint64_t total = 0;
  for (std::uint32_t round = 0; round < k; ++round) total += n - round;
  return total;
}

}  // namespace

TEST_CASE("greedy picks the star center first") {
  const GraphSnapshot g = star4();
  const SelectionResult r = greedy_select(4, 1, exact_oracle(g));
  REQUIRE(r.seeds == SeedSet::single(0));
  REQUIRE(r.eval_count == 4);
}

TEST_CASE("greedy boundary cases") {
  SECTION("K equals N selects everyone") {
    const GraphSnapshot g = star4();
    const SelectionResult r = greedy_select(4, 4, exact_oracle(g));
    REQUIRE(r.seeds == SeedSet({0, 1, 2, 3}));
    REQUIRE(r.eval_count == greedy_eval_count(4, 4));
  }
  SECTION("ties break toward the lowest index") {
    const GraphSnapshot g(4, true, std::vector<Edge>{});
    const SelectionResult r = greedy_select(4, 2, exact_oracle(g));
    REQUIRE(r.seeds == SeedSet({0, 1}));
  }
  SECTION("K outside [1, N] is rejected") {
    const GraphSnapshot g = star4();
    REQUIRE_THROWS_AS(greedy_select(4, 5, exact_oracle(g)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(greedy_select(4, 0, exact_oracle(g)),
                      std::invalid_argument);
  }
}

TEST_CASE("celf matches greedy exactly on deterministic oracles") {
  Rng rng(424242);
  for (int i = 0; i < 50; ++i) {
    const bool directed = rng() & 1;
    const GraphSnapshot g =
        test_util::random_graph(rng, 3, 6, directed ? 12 : 9, directed, 1);
    const std::uint32_t k = 2 + uniform_below(rng, g.n_vertices() - 1);
    const SelectionResult greedy = greedy_select(g.n_vertices(), k, exact_oracle(g));
    const SelectionResult lazy = celf_select(g.n_vertices(), k, exact_oracle(g));
    REQUIRE(lazy.seeds == greedy.seeds);
    REQUIRE(lazy.eval_count <= greedy.eval_count);
  }
}

TEST_CASE("celf with K = 1 evaluates exactly like greedy") {
  const GraphSnapshot g = star4();
  const SelectionResult greedy = greedy_select(4, 1, exact_oracle(g));
  const SelectionResult lazy = celf_select(4, 1, exact_oracle(g));
  REQUIRE(lazy.seeds == greedy.seeds);
  REQUIRE(lazy.eval_count == greedy.eval_count);
}

TEST_CASE("greedy keeps the classical approximation guarantee") {
  Rng rng(777);
  for (int i = 0; i < 25; ++i) {
    const GraphSnapshot g = test_util::random_graph(rng, 3, 6, 10, true, 1);
    const std::uint32_t n = g.n_vertices();
    const SelectionResult greedy = greedy_select(n, 2, exact_oracle(g));

    double best = 0.0;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        best = std::max(best, exact_spread(g, SeedSet({u, v})));
    const double achieved = exact_spread(g, greedy.seeds);
    REQUIRE(achieved >= (1.0 - 1.0 / std::exp(1.0)) * best - 1e-9);
  }
}

TEST_CASE("monte carlo wrappers count interactions per evaluation") {
  const GraphSnapshot g = star4();

  InteractionCounter greedy_counter;
  const SeedSet greedy_set = naive_greedy(g, 2, 100, 5, greedy_counter);
  REQUIRE(greedy_set.contains(0));
  REQUIRE(greedy_counter.count() == greedy_eval_count(4, 2) * 100);

  InteractionCounter celf_counter;
  const SeedSet celf_set = celf(g, 2, 100, 5, celf_counter);
  REQUIRE(celf_set.contains(0));
  REQUIRE(celf_counter.count() <= greedy_counter.count());
}

TEST_CASE("monte carlo selection is deterministic and thread-independent") {
  Rng rng(31);
  const GraphSnapshot g = test_util::random_graph(rng, 10, 10, 30, true, 15);
  InteractionCounter c1, c2, c4;
  const SeedSet a = naive_greedy(g, 3, 200, 9, c1, 1);
  const SeedSet b = naive_greedy(g, 3, 200, 9, c2, 1);
  const SeedSet c = naive_greedy(g, 3, 200, 9, c4, 4);
  REQUIRE(a == b);
  REQUIRE(a == c);
  REQUIRE(c1.count() == c4.count());
}

TEST_CASE("degree heuristic ranks by out-degree") {
  SECTION("star center wins") {
    REQUIRE(top_k_degree(star4(), 1) == SeedSet::single(0));
  }
  SECTION("edgeless ties break toward low indices") {
    const GraphSnapshot g(4, true, std::vector<Edge>{});
    REQUIRE(top_k_degree(g, 2) == SeedSet({0, 1}));
  }
  SECTION("K equals N selects everyone") {
    REQUIRE(top_k_degree(star4(), 4) == SeedSet({0, 1, 2, 3}));
  }
  SECTION("out-degree decides, not in-degree") {
    // vertex 3 receives many edges but sends none
    const GraphSnapshot g(4, true, {{0, 3}, {1, 3}, {2, 3}, {0, 1}});
    REQUIRE(top_k_degree(g, 1) == SeedSet::single(0));
  }
  SECTION("undirected uses plain degree") {
    const GraphSnapshot g(4, false, {{0, 1}, {1, 2}, {1, 3}});
    REQUIRE(top_k_degree(g, 1) == SeedSet::single(1));
  }
  SECTION("bad K is rejected") {
    REQUIRE_THROWS_AS(top_k_degree(star4(), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(top_k_degree(star4(), 5), std::invalid_argument);
  }
}

TEST_CASE("per-snapshot baseline runs") {
  SyntheticConfig net_cfg;
  net_cfg.n_vertices = 20;
  net_cfg.n_snapshots = 3;
  net_cfg.base_edge_prob = 0.1;
  net_cfg.docile_rewire_frac = 0.1;
  net_cfg.rng_seed = 12;
  const TemporalNetwork net = generate_synthetic(net_cfg);

  SECTION("greedy rows carry the full evaluation cost") {
    const auto records = run_temporal_baseline(net, "greedy", 2, 50, 7, 200);
    REQUIRE(records.size() == 3);
    for (std::uint32_t t = 0; t < 3; ++t) {
      REQUIRE(records[t].snapshot_t == t);
      REQUIRE(records[t].algorithm == "greedy");
      REQUIRE(records[t].seeds.size() == 2);
      REQUIRE(records[t].interactions == greedy_eval_count(20, 2) * 50);
      REQUIRE(records[t].spread_mean >= 2.0);
      REQUIRE(records[t].spread_mean <= 20.0);
    }
  }
  SECTION("degree rows cost nothing") {
    const auto records = run_temporal_baseline(net, "degree", 2, 50, 7, 200);
    for (const auto& rec : records) REQUIRE(rec.interactions == 0);
  }
  SECTION("celf never exceeds greedy's budget") {
    const auto greedy = run_temporal_baseline(net, "greedy", 3, 50, 7, 200);
    const auto lazy = run_temporal_baseline(net, "celf", 3, 50, 7, 200);
    for (std::size_t t = 0; t < greedy.size(); ++t)
      REQUIRE(lazy[t].interactions <= greedy[t].interactions);
  }
  SECTION("unknown algorithm is rejected") {
    REQUIRE_THROWS_AS(run_temporal_baseline(net, "psychic", 2, 50, 7, 200),
                      std::invalid_argument);
  }
}
