#include "conprove/mcts/proof_game.hpp"

#include <stdexcept>

namespace conprove::mcts {

RewardKind parse_reward_kind(const std::string& name) {
  if (name == "standard") return RewardKind::Standard;
  if (name == "constant") return RewardKind::Constant;
  if (name == "random") return RewardKind::Random;
  throw std::invalid_argument("unknown reward kind '" + name + "'");
}

std::string to_string(RewardKind k) {
  switch (k) {
    case RewardKind::Standard:
      return "standard";
    case RewardKind::Constant:
      return "constant";
    case RewardKind::Random:
      return "random";
  }
  return "?";
}

ProofGame::ProofGame(const Matrix& m, ProofGameConfig cfg, const ProvabilityModel& model)
    : m_(m), cfg_(cfg), table_(m, model, cfg.reward_config), reward_rng_(cfg.reward_seed) {
  if (!m.prepared()) throw std::invalid_argument("matrix must be prepared");
  validate(cfg_.reward_config);
}

std::vector<ProverState> ProofGame::successors(const ProverState& s) {
  std::vector<ProverState> out;
  for (Successor& n : conprove::successors(s, m_, cfg_.calculus)) {
    if (n.action.kind == Action::Kind::Extension) ++extensions_;
    if (n.action.kind == Action::Kind::Reduction) ++reductions_;
    out.push_back(std::move(n.state));
  }
  return out;
}

std::vector<double> ProofGame::weights(const ProverState&, const std::vector<ProverState>& next) const {
  std::vector<Action> actions;
  actions.reserve(next.size());
  for (const ProverState& t : next) actions.push_back(*t.last_action());
  return transition_weights(m_, actions, cfg_.weights);
}

double ProofGame::reward(const ProverState& s) {
  switch (cfg_.reward) {
    case RewardKind::Constant:
      return 0.5;
    case RewardKind::Random:
      return reward_rng_.uniform();
    case RewardKind::Standard:
      return table_.reward(s);
  }
  return 0.0;
}

}  // namespace conprove::mcts
