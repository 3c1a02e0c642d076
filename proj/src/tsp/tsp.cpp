#include "conprove/tsp/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "conprove/mcts/uct.hpp"

namespace conprove::tsp {

void Instance::set_distance(City i, City j, double v) {
  d_[i * n_ + j] = v;
  d_[j * n_ + i] = v;
}

Instance Instance::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n) || n < 2) throw std::invalid_argument("tsp instance: expected city count of at least 2");
  Instance inst(n);
  std::vector<bool> seen(n * n, false);
  std::size_t i = 0, j = 0;
  double d = 0;
  std::size_t count = 0;
  while (in >> i >> j >> d) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("tsp instance: bad city pair");
    if (d < 0) throw std::invalid_argument("tsp instance: negative distance");
    inst.set_distance(static_cast<City>(i - 1), static_cast<City>(j - 1), d);
    if (!seen[(i - 1) * n + (j - 1)]) ++count;
    seen[(i - 1) * n + (j - 1)] = seen[(j - 1) * n + (i - 1)] = true;
  }
  if (!in.eof()) throw std::invalid_argument("tsp instance: malformed distance line");
  if (count != n * (n - 1) / 2) throw std::invalid_argument("tsp instance: distance table incomplete");
  return inst;
}

Instance Instance::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tsp instance '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Instance::print() const {
  std::ostringstream os;
  os.precision(17);
  os << n_ << "\n";
  for (City i = 0; i < n_; ++i) {
    for (City j = i + 1; j < n_; ++j) os << i + 1 << " " << j + 1 << " " << distance(i, j) << "\n";
  }
  return os.str();
}

Instance Instance::random(std::size_t n, std::uint64_t seed) {
  mcts::Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 100.0 * rng.uniform();
    y[i] = 100.0 * rng.uniform();
  }
  Instance inst(n);
  for (City i = 0; i < n; ++i) {
    for (City j = i + 1; j < n; ++j) inst.set_distance(i, j, std::hypot(x[i] - x[j], y[i] - y[j]));
  }
  return inst;
}

WeightReading parse_weight_reading(const std::string& name) {
  if (name == "prose") return WeightReading::Prose;
  if (name == "formula") return WeightReading::Formula;
  throw std::invalid_argument("unknown weight reading '" + name + "'");
}

double path_length(const Instance& inst, std::span<const City> tour) {
  double len = 0;
  for (std::size_t i = 1; i < tour.size(); ++i) len += inst.distance(tour[i - 1], tour[i]);
  return len;
}

double tour_length(const Instance& inst, std::span<const City> tour) {
  if (tour.empty()) return 0;
  return path_length(inst, tour) + inst.distance(tour.back(), tour.front());
}

namespace {

template <class Pick>
double edge_bound(const Instance& inst, Pick pick) {
  double total = 0;
  for (City i = 0; i < inst.size(); ++i) {
    std::optional<double> best;
    for (City j = 0; j < inst.size(); ++j) {
      if (i != j) best = best ? pick(*best, inst.distance(i, j)) : inst.distance(i, j);
    }
    total += best.value_or(0.0);
  }
  return total;
}

}  // namespace

double lower_bound(const Instance& inst) {
  return edge_bound(inst, [](double a, double b) { return std::min(a, b); });
}

double upper_bound(const Instance& inst) {
  return edge_bound(inst, [](double a, double b) { return std::max(a, b); });
}

double tour_reward(const Instance& inst, std::span<const City> tour) {
  if (tour.size() != inst.size()) throw std::invalid_argument("tour is incomplete");
  const double lb = lower_bound(inst);
  const double ub = upper_bound(inst);
  if (ub <= lb) return 1.0;
  return std::clamp(1.0 - (tour_length(inst, tour) - lb) / (ub - lb), 0.0, 1.0);
}

std::vector<double> rank_weights(std::span<const double> costs, WeightReading reading) {
  std::vector<double> out;
  out.reserve(costs.size());
  for (double c : costs) {
    std::size_t count = 0;
    for (double u : costs) {
      if (reading == WeightReading::Prose ? u <= c : u >= c) ++count;
    }
    out.push_back(1.0 / static_cast<double>(count));
  }
  return out;
}

Optimum brute_force_optimum(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n > 10) throw std::invalid_argument("brute force limited to 10 cities");
  Tour perm(n);
  for (City i = 0; i < n; ++i) perm[i] = i;
  Optimum best;
  best.length = std::numeric_limits<double>::infinity();
  do {
    const double len = tour_length(inst, perm);
    if (len < best.length) {
      best.length = len;
      best.tour = perm;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<Tour> TspProblem::successors(const Tour& s) const {
  std::vector<Tour> out;
  for (City j = 0; j < inst_.size(); ++j) {
    if (std::find(s.begin(), s.end(), j) != s.end()) continue;
    Tour t = s;
    t.push_back(j);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<double> TspProblem::weights(const Tour&, const std::vector<Tour>& next) const {
  std::vector<double> costs;
  costs.reserve(next.size());
  for (const Tour& t : next) costs.push_back(path_length(inst_, t));
  return rank_weights(costs, reading_);
}

double TspProblem::reward(const Tour& s) {
  if (s.size() != inst_.size()) return 0.0;
  const double len = tour_length(inst_, s);
  if (!best_ || len < best_->length) best_ = Optimum{s, len};
  return tour_reward(inst_, s);
}

}  // namespace conprove::tsp
