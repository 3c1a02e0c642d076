#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conprove/harness/corpus.hpp"
#include "conprove/harness/engine.hpp"
#include "conprove/tsp/tsp.hpp"

namespace conprove {

// Exit codes of the proving commands.
inline constexpr int kExitProof = 0;
inline constexpr int kExitNoProof = 1;
inline constexpr int kExitError = 2;

struct ProveOptions {
  EngineConfig engine;
  LoadOptions load;
  std::optional<std::string> model;
  std::optional<std::string> proof_out;
};

int cmd_prove(const std::string& problem, ProveOptions opts, std::ostream& out, std::ostream& err);

struct TrainOptions {
  EngineConfig engine;
  LoadOptions load;
  std::optional<std::string> model_out;
  unsigned jobs = 1;
};

struct TrainSummary {
  std::size_t problems = 0;
  std::size_t solved = 0;
  std::size_t skipped = 0;
  Store store;
};

// Runs the deepening engine with training collection on every corpus
// problem and merges the events of the solved ones.
TrainSummary train_corpus(const std::vector<ProblemInfo>& corpus, const TrainOptions& opts, std::ostream& err);
int cmd_train(const std::string& corpus_dir, const TrainOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<EngineConfig> configs;
  LoadOptions load;
  unsigned jobs = 1;
  std::optional<std::string> csv_out;
};

struct BenchResult {
  // reports[config][problem], both in input order.
  std::vector<std::vector<RunReport>> reports;
  UniqueSolves unique;
};

BenchResult bench_corpus(const std::vector<ProblemInfo>& corpus, const BenchOptions& opts, std::ostream& err);
int cmd_bench(const std::string& corpus_dir, const BenchOptions& opts, std::ostream& out, std::ostream& err);

struct TspOptions {
  std::optional<std::string> instance;
  std::size_t random_cities = 6;
  std::uint64_t instance_seed = 1;
  mcts::SearchConfig search;
  tsp::WeightReading reading = tsp::WeightReading::Prose;
};

int cmd_tsp(const TspOptions& opts, std::ostream& out, std::ostream& err);

int cmd_check(const std::string& problem, const std::string& certificate, const LoadOptions& load,
              std::ostream& out, std::ostream& err);

}  // namespace conprove
