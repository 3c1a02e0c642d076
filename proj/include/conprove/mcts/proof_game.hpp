#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conprove/calculus/state.hpp"
#include "conprove/guidance/reward.hpp"
#include "conprove/guidance/weights.hpp"
#include "conprove/mcts/uct.hpp"

namespace conprove::mcts {

enum class RewardKind { Standard, Constant, Random };

RewardKind parse_reward_kind(const std::string& name);
std::string to_string(RewardKind k);

struct ProofGameConfig {
  CalculusOptions calculus;
  WeightConfig weights;
  RewardKind reward = RewardKind::Standard;
  RewardConfig reward_config;
  // Limit on generated extension steps.
  std::optional<std::uint64_t> max_inferences;
  // Seed of the stream used by RewardKind::Random.
  std::uint64_t reward_seed = 0;
};

// Theorem proving as a single-player game over non-branching calculus states.
class ProofGame {
 public:
  using State = ProverState;

  ProofGame(const Matrix& m, ProofGameConfig cfg, const ProvabilityModel& model = {});

  ProverState initial_state() const { return ProverState::initial(m_); }
  std::vector<ProverState> successors(const ProverState& s);
  std::vector<double> weights(const ProverState& s, const std::vector<ProverState>& next) const;
  double reward(const ProverState& s);
  bool is_success(const ProverState& s) const { return s.closed(); }
  std::size_t subgoal_count(const ProverState& s) const { return s.open_count(); }
  bool budget_spent() const { return cfg_.max_inferences && extensions_ >= *cfg_.max_inferences; }

  // Extension and reduction steps generated by successor enumeration.
  std::uint64_t extensions() const { return extensions_; }
  std::uint64_t reductions() const { return reductions_; }

 private:
  const Matrix& m_;
  ProofGameConfig cfg_;
  ProvabilityTable table_;
  Rng reward_rng_;
  std::uint64_t extensions_ = 0;
  std::uint64_t reductions_ = 0;
};

}  // namespace conprove::mcts
