#include "conprove/guidance/reward.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace conprove {

Combiner parse_combiner(const std::string& name) {
  if (name == "product") return Combiner::Product;
  if (name == "min") return Combiner::Min;
  if (name == "harmonic") return Combiner::Harmonic;
  if (name == "geometric") return Combiner::Geometric;
  if (name == "arithmetic") return Combiner::Arithmetic;
  throw std::invalid_argument("unknown combiner '" + name + "'");
}

std::string to_string(Combiner c) {
  switch (c) {
    case Combiner::Product:
      return "product";
    case Combiner::Min:
      return "min";
    case Combiner::Harmonic:
      return "harmonic";
    case Combiner::Geometric:
      return "geometric";
    case Combiner::Arithmetic:
      return "arithmetic";
  }
  return "?";
}

void validate(const RewardConfig& cfg) {
  if (cfg.ratio_weight < 0 || cfg.model_weight < 0) throw std::invalid_argument("reward weights must be nonnegative");
  if (std::abs(cfg.ratio_weight + cfg.model_weight - 1.0) > 1e-9) {
    throw std::invalid_argument("reward weights must sum to 1");
  }
  if (!(cfg.cert_c >= 0 && cfg.cert_c <= 1)) throw std::invalid_argument("certainty C must lie in [0,1]");
  if (!(cfg.cert_d > 0)) throw std::invalid_argument("certainty D must be positive");
}

double certainty(double x, double c, double d) { return 1.0 - c / (std::pow(x, d) + 1.0); }

double literal_provability(std::uint64_t p, std::uint64_t n, double c, double d) {
  if (p == 0 && n == 0) return 1.0;
  const double total = static_cast<double>(p) + static_cast<double>(n);
  return 1.0 + certainty(total, c, d) * (static_cast<double>(p) / total - 1.0);
}

double literal_provability(std::uint64_t p, std::uint64_t n, const RewardConfig& cfg) {
  return literal_provability(p, n, cfg.cert_c, cfg.cert_d);
}

double combine(std::span<const double> values, Combiner combiner) {
  if (values.empty()) return 1.0;
  const double count = static_cast<double>(values.size());
  const bool has_zero = std::any_of(values.begin(), values.end(), [](double v) { return v <= 0.0; });
  switch (combiner) {
    case Combiner::Product: {
      double r = 1.0;
      for (double v : values) r *= v;
      return r;
    }
    case Combiner::Min:
      return *std::min_element(values.begin(), values.end());
    case Combiner::Harmonic: {
      if (has_zero) return 0.0;
      double s = 0.0;
      for (double v : values) s += 1.0 / v;
      return count / s;
    }
    case Combiner::Geometric: {
      if (has_zero) return 0.0;
      double s = 0.0;
      for (double v : values) s += std::log(v);
      return std::exp(s / count);
    }
    case Combiner::Arithmetic: {
      double s = 0.0;
      for (double v : values) s += v;
      return s / count;
    }
  }
  return 1.0;
}

double subgoal_ratio_reward(const ProverState& s, bool raw) {
  const double ratio = static_cast<double>(s.open_count()) / static_cast<double>(s.opened_total());
  return raw ? ratio : 1.0 - ratio;
}

ProvabilityTable::ProvabilityTable(const Matrix& m, const ProvabilityModel& model, const RewardConfig& cfg)
    : cfg_(cfg) {
  const auto keys = literal_keys(m);
  values_.resize(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    const auto& lits = m.clause(c).literals;
    for (std::size_t j = 0; j < lits.size(); ++j) {
      if (lits[j].is_top()) {
        values_[c].push_back(1.0);
        continue;
      }
      const Stats st = model.stats(keys[c][j]);
      values_[c].push_back(literal_provability(st.p, st.n, cfg));
    }
  }
}

double ProvabilityTable::literal(std::uint32_t clause, std::uint32_t lit) const {
  if (clause == kStartClause) return 1.0;
  return values_[clause][lit];
}

double ProvabilityTable::goal(const Goal& g) const {
  double r = 1.0;
  for (std::size_t i = g.position; i < g.clause->literals.size(); ++i) {
    if (static_cast<std::int32_t>(i) != g.skip) r *= literal(g.clause_id, static_cast<std::uint32_t>(i));
  }
  return r;
}

double ProvabilityTable::state(const ProverState& s) const {
  std::vector<double> values;
  values.reserve(s.open_count());
  for (const Goal& g : s.goals()) values.push_back(goal(g));
  return combine(values, cfg_.combiner);
}

double ProvabilityTable::reward(const ProverState& s) const {
  double ratio_part = 0.0;
  double model_part = 0.0;
  if (cfg_.ratio_weight > 0) ratio_part = cfg_.ratio_weight * subgoal_ratio_reward(s, cfg_.raw_ratio);
  if (cfg_.model_weight > 0) model_part = cfg_.model_weight * state(s);
  const double r = ratio_part + model_part;
  assert(r >= -1e-12 && r <= 1.0 + 1e-12);
  return std::clamp(r, 0.0, 1.0);
}

}  // namespace conprove
