#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "conprove/mcts/uct.hpp"
#include "conprove/util/deadline.hpp"

namespace conprove::mcts {

// A single-player search problem: states, δ, δ_w, reward and success test.
// reward must lie in [0,1].
template <class P>
concept Problem = requires(P& p, const typename P::State& s, const std::vector<typename P::State>& succ) {
  { p.initial_state() } -> std::convertible_to<typename P::State>;
  { p.successors(s) } -> std::convertible_to<std::vector<typename P::State>>;
  { p.weights(s, succ) } -> std::convertible_to<std::vector<double>>;
  { p.reward(s) } -> std::convertible_to<double>;
  { p.is_success(s) } -> std::convertible_to<bool>;
};

// Problems exposing a subgoal count support best-node expansion.
template <class P>
concept HasSubgoals = requires(const P& p, const typename P::State& s) {
  { p.subgoal_count(s) } -> std::convertible_to<std::size_t>;
};

// Problems with their own resource limit, e.g. an inference budget.
template <class P>
concept HasBudget = requires(const P& p) {
  { p.budget_spent() } -> std::convertible_to<bool>;
};

template <class State>
struct Node {
  State state;
  Node* parent = nullptr;
  std::uint64_t visits = 0;
  double reward_sum = 0.0;
  // Visits that went through children which were deleted since.
  std::uint64_t deleted_visits = 0;
  std::uint32_t depth = 0;
  std::vector<std::unique_ptr<Node>> children;
  bool expanded = false;
  std::vector<State> unexplored;
  std::vector<double> unexplored_weights;

  explicit Node(State s) : state(std::move(s)) {}
  double mean() const { return visits ? reward_sum / static_cast<double>(visits) : 0.0; }
};

template <class State>
struct Simulation {
  // States after the start state, in order.
  std::vector<State> trajectory;
  bool success = false;
  // The last state has no successors and is not a success.
  bool dead_end = false;
};

template <Problem P>
Simulation<typename P::State> simulate(P& problem, const typename P::State& start, std::uint32_t max_depth,
                                       Rng& rng) {
  using State = typename P::State;
  Simulation<State> sim;
  const State* cur = &start;
  for (std::uint32_t d = 0; d < max_depth; ++d) {
    if (problem.is_success(*cur)) break;
    std::vector<State> next = problem.successors(*cur);
    if (next.empty()) {
      sim.dead_end = true;
      break;
    }
    const std::vector<double> w = problem.weights(*cur, next);
    sim.trajectory.push_back(std::move(next[rng.pick(w)]));
    cur = &sim.trajectory.back();
  }
  sim.success = problem.is_success(*cur);
  return sim;
}

enum class Status { Running, Solution, Exhausted, IterationLimit, Timeout, BudgetSpent };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Running:
      return "running";
    case Status::Solution:
      return "solution";
    case Status::Exhausted:
      return "exhausted";
    case Status::IterationLimit:
      return "iteration-limit";
    case Status::Timeout:
      return "timeout";
    case Status::BudgetSpent:
      return "budget";
  }
  return "?";
}

struct IterationRecord {
  std::uint64_t iteration = 0;
  std::uint32_t selected_depth = 0;
  std::size_t action_index = 0;
  std::size_t trajectory_length = 0;
  std::size_t expanded_index = 0;
  double reward = 0.0;
  bool success = false;
  bool child_deleted = false;
};

struct SearchStats {
  std::uint64_t iterations = 0;
  std::uint64_t simulation_steps = 0;
  std::uint64_t deletions = 0;
  std::uint32_t max_tree_depth = 0;
  std::uint64_t nodes = 1;
  double wall_time = 0.0;
};

template <class State>
struct RunResult {
  Status status = Status::Running;
  // States from the root (excluded) to the success state.
  std::vector<State> solution;
  SearchStats stats;
};

template <Problem P>
class Search {
 public:
  using State = typename P::State;
  using NodeT = Node<State>;

  Search(P& problem, SearchConfig cfg) : problem_(problem), cfg_(cfg), rng_(cfg.seed) {
    validate(cfg_);
    root_ = std::make_unique<NodeT>(problem_.initial_state());
    if (problem_.is_success(root_->state)) status_ = Status::Solution;
  }

  Status status() const { return status_; }
  const NodeT* root() const { return root_.get(); }
  const std::vector<State>& solution() const { return solution_; }
  const SearchStats& stats() const { return stats_; }
  void set_observer(std::function<void(const IterationRecord&)> f) { observer_ = std::move(f); }

  // One selection/simulation/expansion/backpropagation round.
  Status step() {
    if (status_ != Status::Running) return status_;
    if (!root_) return status_ = Status::Exhausted;
    const std::uint64_t i = ++stats_.iterations;
    const double cp = cp_schedule(i, cfg_);

    NodeT* node = select(cp);
    if (!node) return status_ = Status::Exhausted;

    IterationRecord rec;
    rec.iteration = i;
    rec.selected_depth = node->depth;
    const std::size_t k = rng_.pick(node->unexplored_weights);
    rec.action_index = k;
    State start = std::move(node->unexplored[k]);
    node->unexplored.erase(node->unexplored.begin() + static_cast<std::ptrdiff_t>(k));
    node->unexplored_weights.erase(node->unexplored_weights.begin() + static_cast<std::ptrdiff_t>(k));

    Simulation<State> sim = simulate(problem_, start, cfg_.max_sim_depth, rng_);
    stats_.simulation_steps += sim.trajectory.size();
    rec.trajectory_length = sim.trajectory.size();
    const State& last = sim.trajectory.empty() ? start : sim.trajectory.back();
    const double reward = sim.success ? 1.0 : problem_.reward(last);
    assert(reward >= 0.0 && reward <= 1.0);
    rec.reward = reward;
    rec.success = sim.success;

    const std::size_t chosen = expansion_index(start, sim);
    rec.expanded_index = chosen;
    const bool child_dead = !sim.success && sim.dead_end && chosen == sim.trajectory.size();

    if (sim.success) {
      for (const NodeT* n = node; n->parent; n = n->parent) solution_.push_back(n->state);
      std::reverse(solution_.begin(), solution_.end());
      solution_.push_back(std::move(start));
      for (auto& s : sim.trajectory) solution_.push_back(std::move(s));
      backpropagate(node, reward);
      status_ = Status::Solution;
      if (observer_) observer_(rec);
      return status_;
    }

    State child_state = chosen == 0 ? std::move(start) : std::move(sim.trajectory[chosen - 1]);
    auto child = std::make_unique<NodeT>(std::move(child_state));
    child->parent = node;
    child->depth = node->depth + 1;
    child->visits = 1;
    child->reward_sum = reward;
    stats_.max_tree_depth = std::max(stats_.max_tree_depth, child->depth);
    ++stats_.nodes;
    NodeT* added = child.get();
    node->children.push_back(std::move(child));
    backpropagate(node, reward);
    if (child_dead) {
      remove(added);
      rec.child_deleted = true;
    }
    if (observer_) observer_(rec);
    if (!root_) status_ = Status::Exhausted;
    return status_;
  }

  RunResult<State> run() {
    const Deadline deadline(cfg_.time_budget);
    while (status_ == Status::Running) {
      if (cfg_.max_iterations && stats_.iterations >= *cfg_.max_iterations) {
        status_ = Status::IterationLimit;
        break;
      }
      if (deadline.expired()) {
        status_ = Status::Timeout;
        break;
      }
      if constexpr (HasBudget<P>) {
        if (problem_.budget_spent()) {
          status_ = Status::BudgetSpent;
          break;
        }
      }
      step();
    }
    stats_.wall_time = deadline.elapsed();
    RunResult<State> r;
    r.status = status_;
    r.solution = solution_;
    r.stats = stats_;
    return r;
  }

 private:
  void expand(NodeT* n) {
    if (n->expanded) return;
    n->unexplored = problem_.successors(n->state);
    n->unexplored_weights = problem_.weights(n->state, n->unexplored);
    n->expanded = true;
  }

  // Descends by UCT to a node with an unexplored action, deleting dead ends
  // met on the way. Returns nullptr once the root is gone.
  NodeT* select(double cp) {
    while (root_) {
      NodeT* n = root_.get();
      while (true) {
        expand(n);
        if (!n->unexplored.empty()) return n;
        if (n->children.empty()) {
          remove(n);
          break;
        }
        NodeT* best = nullptr;
        double best_value = 0;
        for (const auto& c : n->children) {
          const double v = uct_value(c->mean(), c->visits, n->visits, cp);
          if (!best || v > best_value) {
            best = c.get();
            best_value = v;
          }
        }
        n = best;
      }
    }
    return nullptr;
  }

  std::size_t expansion_index(const State& start, const Simulation<State>& sim) const {
    if (cfg_.expansion == Expansion::FirstNode) return 0;
    if constexpr (HasSubgoals<P>) {
      std::size_t best = 0;
      std::size_t best_count = problem_.subgoal_count(start);
      for (std::size_t j = 0; j < sim.trajectory.size(); ++j) {
        const std::size_t c = problem_.subgoal_count(sim.trajectory[j]);
        if (c < best_count) {
          best = j + 1;
          best_count = c;
        }
      }
      return best;
    } else {
      return 0;
    }
  }

  void backpropagate(NodeT* from, double reward) {
    for (NodeT* n = from; n; n = n->parent) {
      ++n->visits;
      n->reward_sum += reward;
    }
  }

  // Deletes n and every ancestor left without children or unexplored actions.
  void remove(NodeT* n) {
    while (n) {
      NodeT* parent = n->parent;
      ++stats_.deletions;
      if (!parent) {
        root_.reset();
        return;
      }
      parent->deleted_visits += n->visits;
      auto it = std::find_if(parent->children.begin(), parent->children.end(),
                             [n](const auto& c) { return c.get() == n; });
      parent->children.erase(it);
      if (!(parent->expanded && parent->unexplored.empty() && parent->children.empty())) return;
      n = parent;
    }
  }

  P& problem_;
  SearchConfig cfg_;
  Rng rng_;
  std::unique_ptr<NodeT> root_;
  Status status_ = Status::Running;
  std::vector<State> solution_;
  SearchStats stats_;
  std::function<void(const IterationRecord&)> observer_;
};

}  // namespace conprove::mcts
