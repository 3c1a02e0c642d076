#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conprove/calculus/state.hpp"
#include "conprove/training/store.hpp"

namespace conprove {

enum class Combiner { Product, Min, Harmonic, Geometric, Arithmetic };

Combiner parse_combiner(const std::string& name);
std::string to_string(Combiner c);

struct RewardConfig {
  double ratio_weight = 0.5;
  double model_weight = 0.5;
  Combiner combiner = Combiner::Geometric;
  double cert_c = 1.0;
  double cert_d = 2.0;
  // Use open/opened instead of 1 - open/opened.
  bool raw_ratio = false;
};

// Throws std::invalid_argument for negative weights, weights not summing to
// 1, C outside [0,1] or D <= 0.
void validate(const RewardConfig& cfg);

// c(x) = 1 - C / (x^D + 1)
double certainty(double x, double c, double d);

double literal_provability(std::uint64_t p, std::uint64_t n, double c, double d);
double literal_provability(std::uint64_t p, std::uint64_t n, const RewardConfig& cfg);

// Empty input combines to 1.
double combine(std::span<const double> values, Combiner combiner);

double subgoal_ratio_reward(const ProverState& s, bool raw = false);

// Read-only view of a training store; unseen keys have counts (0,0).
class ProvabilityModel {
 public:
  ProvabilityModel() : store_(std::make_shared<const Store>()) {}
  explicit ProvabilityModel(Store store) : store_(std::make_shared<const Store>(std::move(store))) {}

  Stats stats(const LiteralKey& key) const { return store_->get(key); }
  bool empty() const { return store_->empty(); }
  const Store& store() const { return *store_; }

 private:
  std::shared_ptr<const Store> store_;
};

// Provability estimates for the literals of one matrix, precomputed from a
// model.
class ProvabilityTable {
 public:
  ProvabilityTable(const Matrix& m, const ProvabilityModel& model, const RewardConfig& cfg);

  double literal(std::uint32_t clause, std::uint32_t lit) const;
  // Product over the remaining literals of a goal.
  double goal(const Goal& g) const;
  double state(const ProverState& s) const;
  double reward(const ProverState& s) const;

  const RewardConfig& config() const { return cfg_; }

 private:
  RewardConfig cfg_;
  std::vector<std::vector<double>> values_;
};

}  // namespace conprove
