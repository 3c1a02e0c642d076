#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conprove::tsp {

using City = std::uint32_t;
using Tour = std::vector<City>;

// Symmetric distance table over cities 0..n-1. The text format numbers
// cities from 1.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double distance(City i, City j) const { return d_[i * n_ + j]; }
  void set_distance(City i, City j, double v);

  // "n" on the first line, then "i j d" lines.
  static Instance parse(std::string_view text);
  static Instance load_file(const std::string& path);
  std::string print() const;

  // Euclidean distances between n points drawn uniformly from a 100x100 square.
  static Instance random(std::size_t n, std::uint64_t seed);

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

enum class WeightReading { Prose, Formula };

WeightReading parse_weight_reading(const std::string& name);

// Length of the open path through the tour's cities.
double path_length(const Instance& inst, std::span<const City> tour);
// Length including the leg back to the first city.
double tour_length(const Instance& inst, std::span<const City> tour);

double lower_bound(const Instance& inst);
double upper_bound(const Instance& inst);

// 1 - (len - L_lb) / (L_ub - L_lb); 1 when the bounds coincide. Throws
// std::invalid_argument for incomplete tours.
double tour_reward(const Instance& inst, std::span<const City> tour);

// Prose: 1 / |{u : r(u) <= r(t)}|. Formula: 1 / |{u : r(u) >= r(t)}|.
std::vector<double> rank_weights(std::span<const double> costs, WeightReading reading);

struct Optimum {
  Tour tour;
  double length = 0.0;
};

// Exhaustive search with city 0 fixed first. Throws for n > 10.
Optimum brute_force_optimum(const Instance& inst);

// The MCTS problem: states are partial tours, starting from the empty one.
class TspProblem {
 public:
  using State = Tour;

  TspProblem(const Instance& inst, WeightReading reading) : inst_(inst), reading_(reading) {}

  Tour initial_state() const { return {}; }
  std::vector<Tour> successors(const Tour& s) const;
  std::vector<double> weights(const Tour& s, const std::vector<Tour>& next) const;
  // Tour reward for complete tours (recorded as best if shorter), 0 otherwise.
  double reward(const Tour& s);
  bool is_success(const Tour&) const { return false; }

  const std::optional<Optimum>& best() const { return best_; }

 private:
  const Instance& inst_;
  WeightReading reading_;
  std::optional<Optimum> best_;
};

}  // namespace conprove::tsp
