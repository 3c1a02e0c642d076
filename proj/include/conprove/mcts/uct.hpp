#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>

namespace conprove::mcts {

// X̄_j + cp * sqrt(2 ln n / n_j)
double uct_value(double mean, std::uint64_t visits, std::uint64_t parent_visits, double cp);

enum class Expansion { FirstNode, BestNode };

Expansion parse_expansion(const std::string& name);
std::string to_string(Expansion e);

struct SearchConfig {
  double cp = 1.0 / std::sqrt(2.0);
  double cp_amplitude = 0.0;
  double cp_period = 0.0;
  std::uint32_t max_sim_depth = 20;
  std::optional<std::uint64_t> max_iterations;
  std::optional<double> time_budget;
  Expansion expansion = Expansion::FirstNode;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument for cp <= 0, cp_amplitude >= cp, a nonzero
// amplitude with a nonpositive period, or max_sim_depth < 1.
void validate(const SearchConfig& cfg);

// cp + amplitude * sin(2π i / period)
double cp_schedule(std::uint64_t iteration, const SearchConfig& cfg);

// Each search owns one generator seeded from its configuration seed; runs
// never share a stream. Doubles take the top 53 bits of each draw so the
// sequence is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Index drawn with probability proportional to its weight.
  std::size_t pick(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace conprove::mcts
