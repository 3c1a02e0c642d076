#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "conprove/harness/commands.hpp"

using namespace conprove;

namespace {

struct EngineFlags {
  std::string engine = "deepening";
  std::optional<double> timeout;
  std::uint64_t seed = 0;
  double cp = 1.0 / std::sqrt(2.0);
  double cp_amp = 0.0;
  double cp_period = 0.0;
  std::uint32_t sim_depth = 20;
  std::string expansion = "first";
  std::string weights = "constant";
  double reduction_weight = 1.0;
  std::string reward = "standard";
  double ratio_weight = 0.5;
  bool raw_ratio = false;
  std::string combiner = "geometric";
  double cert_c = 1.0;
  double cert_d = 2.0;
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::uint64_t> max_inferences;
  std::uint32_t depth_start = 1;
  std::uint32_t depth_step = 1;
  std::optional<std::uint32_t> depth_cap;
  bool cut = false;
  bool regularity = true;
  bool lemmas = true;
  std::string include_dir;
  bool equality_axioms = false;

  void add(CLI::App* app) {
    app->add_option("--engine", engine, "Search engine")->check(CLI::IsMember({"deepening", "mcts"}));
    app->add_option("--timeout", timeout, "Time budget per problem in seconds");
    app->add_option("--seed", seed, "Random seed of the MCTS search");
    app->add_option("--cp", cp, "Base exploration constant");
    app->add_option("--cp-amp", cp_amp, "Amplitude of the exploration constant oscillation");
    app->add_option("--cp-period", cp_period, "Period of the exploration constant oscillation");
    app->add_option("--sim-depth", sim_depth, "Maximal simulation depth");
    app->add_option("--expansion", expansion, "Expansion policy")->check(CLI::IsMember({"first", "best"}));
    app->add_option("--weights", weights, "Transition weight policy")
        ->check(CLI::IsMember({"constant", "inverse", "rank"}));
    app->add_option("--reduction-weight", reduction_weight, "Transition weight of reduction steps");
    app->add_option("--reward", reward, "Reward function")->check(CLI::IsMember({"standard", "constant", "random"}));
    app->add_option("--reward-ratio-weight", ratio_weight, "Weight of the subgoal ratio; the model gets the rest");
    app->add_flag("--raw-ratio", raw_ratio, "Use open/opened instead of 1 - open/opened");
    app->add_option("--combiner", combiner, "Combination of clause provabilities")
        ->check(CLI::IsMember({"product", "min", "harmonic", "geometric", "arithmetic"}));
    app->add_option("--cert-c", cert_c, "Certainty constant C");
    app->add_option("--cert-d", cert_d, "Certainty constant D");
    app->add_option("--max-iterations", max_iterations, "MCTS iteration budget");
    app->add_option("--max-inferences", max_inferences, "Extension step budget");
    app->add_option("--depth-start", depth_start, "First depth bound of iterative deepening");
    app->add_option("--depth-step", depth_step, "Depth bound increment");
    app->add_option("--depth-cap", depth_cap, "Largest depth bound");
    app->add_flag("--cut,!--no-cut", cut, "Commit to the first closure of a goal literal");
    app->add_flag("--regularity,!--no-regularity", regularity, "Regularity check");
    app->add_flag("--lemmas,!--no-lemmas", lemmas, "Lemma steps");
    app->add_option("--include-dir", include_dir, "Directory for include directives");
    app->add_flag("--equality-axioms", equality_axioms, "Add equality axioms when '=' occurs");
  }

  EngineConfig build() const {
    EngineConfig c;
    c.engine = parse_engine(engine);
    c.name = engine;
    c.timeout = timeout;
    c.max_inferences = max_inferences;
    c.deepening.start_depth = depth_start;
    c.deepening.increment = depth_step;
    c.deepening.max_depth = depth_cap;
    c.deepening.cut = cut;
    c.deepening.regularity = regularity;
    c.deepening.lemmas = lemmas;
    validate(c.deepening);
    c.search.cp = cp;
    c.search.cp_amplitude = cp_amp;
    c.search.cp_period = cp_period;
    c.search.max_sim_depth = sim_depth;
    c.search.expansion = mcts::parse_expansion(expansion);
    c.search.seed = seed;
    c.search.max_iterations = max_iterations;
    mcts::validate(c.search);
    c.game.calculus.regularity = regularity;
    c.game.calculus.lemmas = lemmas;
    c.game.weights.policy = parse_weight_policy(weights);
    c.game.weights.reduction_weight = reduction_weight;
    if (!(reduction_weight > 0)) throw std::invalid_argument("reduction weight must be positive");
    c.game.reward = mcts::parse_reward_kind(reward);
    c.game.reward_config.ratio_weight = ratio_weight;
    c.game.reward_config.model_weight = 1.0 - ratio_weight;
    c.game.reward_config.raw_ratio = raw_ratio;
    c.game.reward_config.combiner = parse_combiner(combiner);
    c.game.reward_config.cert_c = cert_c;
    c.game.reward_config.cert_d = cert_d;
    validate(c.game.reward_config);
    return c;
  }

  LoadOptions load() const {
    LoadOptions l;
    l.include_dir = include_dir;
    l.clausify.equality_axioms = equality_axioms;
    return l;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection prover with iterative deepening and Monte Carlo tree search"};
  app.require_subcommand(1);

  EngineFlags flags;
  std::string problem, corpus, certificate;
  std::optional<std::string> model, model_out, proof_out, csv_out, tsp_file;
  unsigned jobs = 1;
  std::string configs = "bf,unguided,guided";

  auto* prove = app.add_subcommand("prove", "Prove one problem");
  prove->add_option("problem", problem, "TPTP problem file")->required();
  flags.add(prove);
  prove->add_option("--model", model, "Literal statistics file");
  prove->add_option("--proof-out", proof_out, "Write the proof certificate here");

  auto* train = app.add_subcommand("train", "Collect literal statistics from deepening proofs");
  train->add_option("corpus", corpus, "Directory of problem files")->required();
  flags.add(train);
  train->add_option("--model-out", model_out, "Write the statistics here");
  train->add_option("--jobs", jobs, "Parallel problems");

  auto* bench = app.add_subcommand("bench", "Compare engine configurations on a corpus");
  bench->add_option("corpus", corpus, "Directory of problem files")->required();
  flags.add(bench);
  bench->add_option("--configs", configs, "Comma-separated: deepening, mcts, bf, unguided, guided");
  bench->add_option("--model", model, "Literal statistics file for guided runs");
  bench->add_option("--csv", csv_out, "Write per-problem rows here");
  bench->add_option("--jobs", jobs, "Parallel problems");

  TspOptions tsp_opts;
  std::uint64_t tsp_iterations = 20000;
  std::string reading = "prose";
  auto* tsp = app.add_subcommand("tsp", "Travelling salesman search with the generic MCTS engine");
  tsp->add_option("instance", tsp_file, "Instance file; a random instance is used if omitted");
  tsp->add_option("--cities", tsp_opts.random_cities, "Cities of the random instance");
  tsp->add_option("--instance-seed", tsp_opts.instance_seed, "Seed of the random instance");
  tsp->add_option("--seed", tsp_opts.search.seed, "Search seed");
  tsp->add_option("--iterations", tsp_iterations, "MCTS iterations");
  tsp->add_option("--cp", tsp_opts.search.cp, "Exploration constant");
  tsp->add_option("--reading", reading, "Weight formula reading")->check(CLI::IsMember({"prose", "formula"}));

  auto* check = app.add_subcommand("check", "Verify a proof certificate");
  check->add_option("problem", problem, "TPTP problem file")->required();
  check->add_option("certificate", certificate, "Certificate file")->required();
  std::string check_include;
  bool check_equality = false;
  check->add_option("--include-dir", check_include, "Directory for include directives");
  check->add_flag("--equality-axioms", check_equality, "Add equality axioms when '=' occurs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*prove) {
      ProveOptions o;
      o.engine = flags.build();
      o.load = flags.load();
      o.model = model;
      o.proof_out = proof_out;
      return cmd_prove(problem, o, std::cout, std::cerr);
    }
    if (*train) {
      TrainOptions o;
      o.engine = flags.build();
      o.load = flags.load();
      o.model_out = model_out;
      o.jobs = jobs;
      return cmd_train(corpus, o, std::cout, std::cerr);
    }
    if (*bench) {
      BenchOptions o;
      EngineConfig base = flags.build();
      if (model) base.model = ProvabilityModel(Store::load_file(*model));
      for (const auto& name : split(configs, ',')) o.configs.push_back(preset(name, base));
      o.load = flags.load();
      o.jobs = jobs;
      o.csv_out = csv_out;
      return cmd_bench(corpus, o, std::cout, std::cerr);
    }
    if (*tsp) {
      tsp_opts.instance = tsp_file;
      tsp_opts.search.max_iterations = tsp_iterations;
      tsp_opts.reading = tsp::parse_weight_reading(reading);
      mcts::validate(tsp_opts.search);
      return cmd_tsp(tsp_opts, std::cout, std::cerr);
    }
    if (*check) {
      LoadOptions l;
      l.include_dir = check_include;
      l.clausify.equality_axioms = check_equality;
      return cmd_check(problem, certificate, l, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
