#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conprove/calculus/certificate.hpp"
#include "conprove/deepening/prover.hpp"
#include "conprove/guidance/reward.hpp"
#include "conprove/mcts/proof_game.hpp"
#include "conprove/mcts/uct.hpp"

namespace conprove {

enum class EngineKind { Deepening, Mcts };

EngineKind parse_engine(const std::string& name);
std::string to_string(EngineKind e);

struct EngineConfig {
  std::string name;
  EngineKind engine = EngineKind::Deepening;
  DeepeningOptions deepening;
  mcts::SearchConfig search;
  mcts::ProofGameConfig game;
  ProvabilityModel model;
  std::optional<double> timeout;
  std::optional<std::uint64_t> max_inferences;
};

// Named benchmark configurations derived from `base`:
//   deepening  iterative deepening
//   mcts       base MCTS settings unchanged
//   bf         constant reward, simulation depth 1, constant weights
//   unguided   constant reward, constant weights, base simulation depth
//   guided     inverse-size weights, learned reward
EngineConfig preset(const std::string& name, const EngineConfig& base);

struct RunReport {
  std::string problem;
  std::string config;
  EngineKind engine = EngineKind::Deepening;
  std::string outcome;
  double wall_time = 0.0;
  // Inferences performed by the search.
  std::uint64_t extensions = 0;
  std::uint64_t reductions = 0;
  std::uint64_t iterations = 0;
  // Depth bound of the last deepening iteration.
  std::optional<std::uint32_t> depth;
  // Deepening saturation without depth pruning or cut: no proof exists.
  bool exhaustive = false;
  // Extension steps on the proof path, and as counted by the checker.
  std::uint64_t proof_extensions = 0;
  std::optional<ProofCertificate> certificate;
  std::optional<CheckResult> check;
  std::vector<TrainingEvent> events;

  bool solved() const { return certificate && check && check->accepted; }
};

RunReport run_engine(const Matrix& m, const std::string& problem_id, const EngineConfig& cfg);

// Human-readable report without timing, stable across runs.
std::string format_report(const RunReport& r);
std::string csv_header();
std::string csv_row(const RunReport& r);

}  // namespace conprove
