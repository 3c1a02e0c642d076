#include "conprove/harness/engine.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "conprove/mcts/engine.hpp"
#include "conprove/util/deadline.hpp"

namespace conprove {

EngineKind parse_engine(const std::string& name) {
  if (name == "deepening") return EngineKind::Deepening;
  if (name == "mcts") return EngineKind::Mcts;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

std::string to_string(EngineKind e) { return e == EngineKind::Deepening ? "deepening" : "mcts"; }

EngineConfig preset(const std::string& name, const EngineConfig& base) {
  EngineConfig c = base;
  c.name = name;
  if (name == "deepening") {
    c.engine = EngineKind::Deepening;
  } else if (name == "mcts") {
    c.engine = EngineKind::Mcts;
  } else if (name == "bf") {
    c.engine = EngineKind::Mcts;
    c.game.reward = mcts::RewardKind::Constant;
    c.game.weights.policy = WeightPolicy::Constant;
    c.search.max_sim_depth = 1;
  } else if (name == "unguided") {
    c.engine = EngineKind::Mcts;
    c.game.reward = mcts::RewardKind::Constant;
    c.game.weights.policy = WeightPolicy::Constant;
  } else if (name == "guided") {
    c.engine = EngineKind::Mcts;
    c.game.reward = mcts::RewardKind::Standard;
    c.game.weights.policy = WeightPolicy::InverseSize;
  } else {
    throw std::invalid_argument("unknown configuration '" + name + "'");
  }
  return c;
}

namespace {

void run_deepening(const Matrix& m, const EngineConfig& cfg, RunReport& r) {
  DeepeningOptions opts = cfg.deepening;
  opts.time_budget = cfg.timeout;
  if (cfg.max_inferences) opts.inference_budget = cfg.max_inferences;
  SearchOutcome out = prove_iterative(m, opts);
  r.outcome = to_string(out.result);
  r.extensions = out.stats.extensions;
  r.reductions = out.stats.reductions;
  r.iterations = out.stats.iterations;
  r.depth = out.depth;
  r.exhaustive = out.result == SearchResult::Saturated && out.exhaustive;
  if (out.certificate) {
    r.certificate = std::move(out.certificate);
    r.proof_extensions = out.proof_counts.extensions;
    r.events = std::move(out.events);
  }
}

void run_mcts(const Matrix& m, const EngineConfig& cfg, RunReport& r) {
  mcts::ProofGameConfig game = cfg.game;
  if (cfg.max_inferences) game.max_inferences = cfg.max_inferences;
  game.reward_seed = cfg.search.seed ^ 0x9e3779b97f4a7c15ULL;
  mcts::SearchConfig search = cfg.search;
  search.time_budget = cfg.timeout;
  mcts::ProofGame problem(m, game, cfg.model);
  mcts::Search<mcts::ProofGame> engine(problem, search);
  auto result = engine.run();
  r.iterations = result.stats.iterations;
  r.extensions = problem.extensions();
  r.reductions = problem.reductions();
  if (result.status == mcts::Status::Solution) {
    r.outcome = "proof";
    const ProverState& closed = result.solution.back();
    r.certificate = make_certificate(m, closed);
    r.proof_extensions = closed.counts().extensions;
  } else {
    r.outcome = mcts::to_string(result.status);
  }
}

}  // namespace

RunReport run_engine(const Matrix& m, const std::string& problem_id, const EngineConfig& cfg) {
  RunReport r;
  r.problem = problem_id;
  r.config = cfg.name.empty() ? to_string(cfg.engine) : cfg.name;
  r.engine = cfg.engine;
  const Deadline clock;
  if (!m.has_positive_clause()) {
    r.outcome = "no-start-clause";
  } else if (cfg.engine == EngineKind::Deepening) {
    run_deepening(m, cfg, r);
  } else {
    run_mcts(m, cfg, r);
  }
  if (r.certificate) {
    r.check = check_proof(m, *r.certificate);
    if (!r.check->accepted) r.outcome = "rejected-proof";
  }
  r.wall_time = clock.elapsed();
  return r;
}

std::string format_report(const RunReport& r) {
  std::ostringstream os;
  os << "problem: " << r.problem << "\n";
  os << "config: " << r.config << "\n";
  os << "engine: " << to_string(r.engine) << "\n";
  os << "outcome: " << r.outcome << "\n";
  os << "extensions: " << r.extensions << "\n";
  os << "reductions: " << r.reductions << "\n";
  os << "iterations: " << r.iterations << "\n";
  if (r.depth) os << "depth-bound: " << *r.depth << "\n";
  if (r.exhaustive) os << "exhaustive: yes\n";
  if (r.certificate) {
    os << "proof-steps: " << r.certificate->actions.size() << "\n";
    os << "proof-extensions: " << r.proof_extensions << "\n";
  }
  if (r.check) {
    if (r.check->accepted) {
      os << "checker: accept (" << r.check->extensions << " extensions)\n";
    } else {
      os << "checker: reject at step " << r.check->failed_step << ": " << r.check->reason << "\n";
    }
  }
  return os.str();
}

std::string csv_header() {
  return "problem,config,engine,outcome,solved,wall_time,extensions,reductions,iterations,proof_extensions,"
         "checker_extensions\n";
}

std::string csv_row(const RunReport& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.6f", r.wall_time);
  std::ostringstream os;
  os << r.problem << "," << r.config << "," << to_string(r.engine) << "," << r.outcome << "," << (r.solved() ? 1 : 0)
     << "," << time << "," << r.extensions << "," << r.reductions << "," << r.iterations << "," << r.proof_extensions
     << "," << (r.check ? r.check->extensions : 0) << "\n";
  return os.str();
}

}  // namespace conprove
