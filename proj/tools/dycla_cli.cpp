// Command-line harness: synthetic dataset generation, influence-maximization
// experiment runs, and cross-algorithm result comparison.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dycla/baselines.hpp"
#include "dycla/cla.hpp"
#include "dycla/experiment.hpp"
#include "dycla/graph_io.hpp"
#include "dycla/synthetic.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct GenerateArgs {
  dycla::SyntheticConfig cfg;
  std::string out;
};

struct RunArgs {
  std::string net;
  std::string algo;
  std::uint32_t k = 1;
  double phi = 1.0;
  double delta0 = 0.0;      // derived from K unless given
  double ddelta = 0.0;      // derived from K unless given
  double threshold = 0.999;
  std::uint32_t resolution = 0;  // derived from K unless given
  std::uint32_t mc_sims = 10000;
  std::uint32_t feedback_sims = 1;
  std::uint32_t dsigma_sims = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool timing = false;
  std::string out;
  std::string trace;
};

struct CompareArgs {
  std::vector<std::string> inputs;
  std::string out;
};

int do_generate(const GenerateArgs& args) {
  const dycla::TemporalNetwork network = dycla::generate_synthetic(args.cfg);
  dycla::save_temporal_network(network, args.out);
  std::cout << "N=" << network.n_vertices() << " T=" << network.size()
            << " directed=" << (network.directed() ? 1 : 0) << "\n";
  for (std::uint32_t t = 0; t < network.size(); ++t)
    std::cout << "snapshot " << t << ": " << network[t].num_edges()
              << " edges\n";
  return 0;
}

int do_run(const RunArgs& args) {
  const dycla::TemporalNetwork network = dycla::load_temporal_network(args.net);

  dycla::ClaConfig cfg;
  cfg.k_seeds = args.k;
  cfg.phi = args.phi;
  cfg.delta0 = args.delta0;
  cfg.delta_inc = args.ddelta;
  cfg.threshold = args.threshold;
  cfg.resolution = args.resolution;
  cfg.feedback_sims = args.feedback_sims;
  cfg.delta_sigma_sims = args.dsigma_sims;
  cfg.rng_seed = args.seed;

  const bool automata_algo = args.algo == "dycla" || args.algo == "cla-cold";
  if (!args.trace.empty() && !automata_algo)
    throw std::invalid_argument("--trace requires --algo dycla or cla-cold");

  std::ofstream trace_out;
  dycla::TraceHook hook;
  if (!args.trace.empty()) {
    trace_out.open(args.trace, std::ios::binary);
    if (!trace_out)
      throw std::runtime_error("cannot open " + args.trace + " for writing");
    trace_out << "iteration,automaton";
    for (std::uint32_t v = 0; v < network.n_vertices(); ++v)
      trace_out << ",p_" << v;
    trace_out << "\n";
    hook = [&trace_out](std::uint64_t iteration, std::uint32_t automaton,
                        const std::vector<double>& p) {
      trace_out << iteration << ',' << automaton;
      for (const double x : p)
        trace_out << ',' << dycla::detail::format_shortest(x);
      trace_out << "\n";
    };
  }

  std::vector<dycla::ExperimentRecord> records;
  if (args.algo == "dycla")
    records = dycla::run_temporal(network, cfg, args.mc_sims, hook, args.threads);
  else if (args.algo == "cla-cold")
    records = dycla::run_temporal_cold(network, cfg, args.mc_sims, hook,
                                       args.threads);
  else
    records = dycla::run_temporal_baseline(network, args.algo, args.k,
                                           args.mc_sims, args.seed,
                                           args.mc_sims, args.threads);

  // Timing is non-deterministic, so it is opt-in; the default keeps result
  // files byte-identical across reruns.
  if (!args.timing)
    for (auto& rec : records) rec.wall_ms = 0;

  dycla::write_results_csv(args.out, records);
  if (!args.trace.empty()) {
    trace_out.flush();
    if (!trace_out) throw std::runtime_error("write failed: " + args.trace);
  }

  const auto fmt = [](double v) { return dycla::detail::format_shortest(v); };
  dycla::write_manifest(
      args.out + ".manifest",
      {{"tool_version", std::string(dycla::kToolVersion)},
       {"network", args.net},
       {"algorithm", args.algo},
       {"k", std::to_string(args.k)},
       {"phi", fmt(args.phi)},
       {"delta0", fmt(cfg.delta0)},
       {"ddelta", fmt(cfg.delta_inc)},
       {"threshold", fmt(cfg.threshold)},
       {"resolution", std::to_string(cfg.resolution)},
       {"mc_sims", std::to_string(args.mc_sims)},
       {"feedback_sims", std::to_string(cfg.feedback_sims)},
       {"dsigma_sims", std::to_string(cfg.delta_sigma_sims)},
       {"seed", std::to_string(args.seed)},
       {"threads", std::to_string(args.threads)},
       {"timing", args.timing ? "1" : "0"}});

  std::cout << "wrote " << records.size() << " records to " << args.out << "\n";
  return 0;
}

int do_compare(const CompareArgs& args) {
  std::vector<std::vector<dycla::ExperimentRecord>> runs;
  runs.reserve(args.inputs.size());
  for (const auto& path : args.inputs)
    runs.push_back(dycla::read_results_csv(path));
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].size() != runs[0].size())
      throw std::runtime_error("snapshot count mismatch: " + args.inputs[0] +
                               " has " + std::to_string(runs[0].size()) +
                               " rows, " + args.inputs[i] + " has " +
                               std::to_string(runs[i].size()));

  // One row per (snapshot, input), snapshots outermost: the per-snapshot
  // blocks line the algorithms up for side-by-side reading.
  std::vector<dycla::ExperimentRecord> joined;
  joined.reserve(runs.size() * runs[0].size());
  for (std::size_t row = 0; row < runs[0].size(); ++row)
    for (const auto& run : runs) joined.push_back(run[row]);
  dycla::write_results_csv(args.out, joined);
  std::cout << "wrote " << joined.size() << " records to " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influence maximization on dynamic networks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen =
      app.add_subcommand("generate", "Generate a synthetic temporal network");
  cmd_gen->add_option("--n", gen.cfg.n_vertices, "Number of vertices")
      ->required();
  cmd_gen->add_option("--snapshots", gen.cfg.n_snapshots, "Number of snapshots")
      ->capture_default_str();
  cmd_gen->add_option("--edge-prob", gen.cfg.base_edge_prob,
                      "Base edge probability for snapshot 0")
      ->capture_default_str();
  cmd_gen->add_option("--docile-frac", gen.cfg.docile_rewire_frac,
                      "Edge fraction rewired per ordinary snapshot step")
      ->capture_default_str();
  cmd_gen->add_option("--drastic-frac", gen.cfg.drastic_rewire_frac,
                      "Edge fraction rewired at drastic steps")
      ->capture_default_str();
  cmd_gen->add_option("--drastic-at", gen.cfg.drastic_steps,
                      "Snapshot indices rewired drastically (repeatable)");
  cmd_gen->add_option("--seed", gen.cfg.rng_seed, "RNG seed")
      ->capture_default_str();
  cmd_gen->add_option("--out", gen.out, "Output network file")->required();

  RunArgs run;
  CLI::App* cmd_run =
      app.add_subcommand("run", "Run one algorithm over a temporal network");
  cmd_run->add_option("--net", run.net, "Temporal network file")->required();
  cmd_run
      ->add_option("--algo", run.algo,
                   "Algorithm: dycla, cla-cold, greedy, celf, degree")
      ->required()
      ->check(CLI::IsMember({"dycla", "cla-cold", "greedy", "celf", "degree"}));
  cmd_run->add_option("--k", run.k, "Seed-set size")->capture_default_str();
  cmd_run->add_option("--phi", run.phi, "Adaptation strength")
      ->capture_default_str();
  cmd_run->add_option("--delta0", run.delta0,
                      "Initial round threshold (default 1/K)");
  cmd_run->add_option("--ddelta", run.ddelta,
                      "Round threshold increment (default 1/(2K))");
  cmd_run->add_option("--threshold", run.threshold, "Final convergence threshold")
      ->capture_default_str();
  cmd_run->add_option("--resolution", run.resolution,
                      "Pursuit resolution (default K)");
  cmd_run->add_option("--mc-sims", run.mc_sims,
                      "Cascades per reported spread estimate and per "
                      "greedy/celf evaluation")
      ->capture_default_str();
  cmd_run->add_option("--feedback-sims", run.feedback_sims,
                      "Cascades averaged per automaton feedback")
      ->capture_default_str();
  cmd_run->add_option("--dsigma-sims", run.dsigma_sims,
                      "Cascades per influence-range probe")
      ->capture_default_str();
  cmd_run->add_option("--seed", run.seed, "RNG seed")->capture_default_str();
  cmd_run->add_option("--threads", run.threads, "Worker thread cap")
      ->capture_default_str();
  cmd_run->add_flag("--timing", run.timing,
                    "Record real wall-clock times (non-deterministic)");
  cmd_run->add_option("--out", run.out, "Results CSV path")->required();
  cmd_run->add_option("--trace", run.trace,
                      "Probability-trajectory CSV path (dycla/cla-cold)");

  CompareArgs cmp;
  CLI::App* cmd_cmp =
      app.add_subcommand("compare", "Join result CSVs for side-by-side reading");
  cmd_cmp->add_option("inputs", cmp.inputs, "Result CSV files (at least two)")
      ->required()
      ->expected(2, -1);
  cmd_cmp->add_option("--out", cmp.out, "Comparison CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // help/version exit cleanly
  }

  try {
    if (app.got_subcommand(cmd_gen)) return do_generate(gen);
    if (app.got_subcommand(cmd_run)) {
      if (run.k < 1) throw std::invalid_argument("--k must be >= 1");
      if (cmd_run->count("--delta0") == 0) run.delta0 = 1.0 / run.k;
      if (cmd_run->count("--ddelta") == 0) run.ddelta = 1.0 / (2.0 * run.k);
      if (cmd_run->count("--resolution") == 0) run.resolution = run.k;
      return do_run(run);
    }
    return do_compare(cmp);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
