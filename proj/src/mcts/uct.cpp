#include "conprove/mcts/uct.hpp"

#include <numbers>
#include <stdexcept>

namespace conprove::mcts {

double uct_value(double mean, std::uint64_t visits, std::uint64_t parent_visits, double cp) {
  return mean + cp * std::sqrt(2.0 * std::log(static_cast<double>(parent_visits)) / static_cast<double>(visits));
}

Expansion parse_expansion(const std::string& name) {
  if (name == "first") return Expansion::FirstNode;
  if (name == "best") return Expansion::BestNode;
  throw std::invalid_argument("unknown expansion policy '" + name + "'");
}

std::string to_string(Expansion e) { return e == Expansion::FirstNode ? "first" : "best"; }

void validate(const SearchConfig& cfg) {
  if (!(cfg.cp > 0)) throw std::invalid_argument("cp must be positive");
  if (std::abs(cfg.cp_amplitude) >= cfg.cp) throw std::invalid_argument("cp amplitude must be smaller than cp");
  if (cfg.cp_amplitude != 0 && !(cfg.cp_period > 0)) throw std::invalid_argument("cp period must be positive");
  if (cfg.max_sim_depth < 1) throw std::invalid_argument("simulation depth must be at least 1");
}

double cp_schedule(std::uint64_t iteration, const SearchConfig& cfg) {
  if (cfg.cp_amplitude == 0) return cfg.cp;
  return cfg.cp + cfg.cp_amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(iteration) / cfg.cp_period);
}

std::size_t Rng::pick(std::span<const double> weights) {
  double total = 0;
  for (double w : weights) total += w;
  const double u = uniform() * total;
  double acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace conprove::mcts
