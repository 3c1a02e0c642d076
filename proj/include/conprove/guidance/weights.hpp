#pragma once

#include <span>
#include <string>
#include <vector>

#include "conprove/calculus/state.hpp"

namespace conprove {

enum class WeightPolicy { Constant, InverseSize, Rank };

WeightPolicy parse_weight_policy(const std::string& name);
std::string to_string(WeightPolicy p);

struct WeightConfig {
  WeightPolicy policy = WeightPolicy::Constant;
  // Weight of reduction and lemma steps under every policy.
  double reduction_weight = 1.0;
};

// Clause size used by the size-based policies; the start marker is not counted.
std::size_t weight_size(const Clause& c);

// Weight of the step taken by `action`; `siblings` are the actions of all of
// δ(s), which the rank policy compares against.
double transition_weight(const Matrix& m, const Action& action, std::span<const Action> siblings,
                         const WeightConfig& cfg);

std::vector<double> transition_weights(const Matrix& m, std::span<const Action> actions, const WeightConfig& cfg);
std::vector<double> transition_weights(const Matrix& m, std::span<const Successor> successors,
                                       const WeightConfig& cfg);

}  // namespace conprove
