#include "conprove/guidance/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace conprove {

WeightPolicy parse_weight_policy(const std::string& name) {
  if (name == "constant") return WeightPolicy::Constant;
  if (name == "inverse") return WeightPolicy::InverseSize;
  if (name == "rank") return WeightPolicy::Rank;
  throw std::invalid_argument("unknown weight policy '" + name + "'");
}

std::string to_string(WeightPolicy p) {
  switch (p) {
    case WeightPolicy::Constant:
      return "constant";
    case WeightPolicy::InverseSize:
      return "inverse";
    case WeightPolicy::Rank:
      return "rank";
  }
  return "?";
}

std::size_t weight_size(const Clause& c) { return std::max<std::size_t>(1, c.proper_size()); }

double transition_weight(const Matrix& m, const Action& action, std::span<const Action> siblings,
                         const WeightConfig& cfg) {
  if (action.kind != Action::Kind::Extension) return cfg.reduction_weight;
  switch (cfg.policy) {
    case WeightPolicy::Constant:
      return 1.0;
    case WeightPolicy::InverseSize:
      return 1.0 / static_cast<double>(weight_size(m.clause(action.a)));
    case WeightPolicy::Rank: {
      const std::size_t size = weight_size(m.clause(action.a));
      std::size_t smaller = 0;
      for (const Action& o : siblings) {
        if (o.kind == Action::Kind::Extension && weight_size(m.clause(o.a)) <= size) ++smaller;
      }
      return 1.0 / static_cast<double>(std::max<std::size_t>(1, smaller));
    }
  }
  return 1.0;
}

std::vector<double> transition_weights(const Matrix& m, std::span<const Action> actions, const WeightConfig& cfg) {
  std::vector<double> out;
  out.reserve(actions.size());
  for (const Action& a : actions) out.push_back(transition_weight(m, a, actions, cfg));
  return out;
}

std::vector<double> transition_weights(const Matrix& m, std::span<const Successor> successors,
                                       const WeightConfig& cfg) {
  std::vector<Action> actions;
  actions.reserve(successors.size());
  for (const Successor& s : successors) actions.push_back(s.action);
  return transition_weights(m, actions, cfg);
}

}  // namespace conprove
