#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "toys.hpp"

#include "conprove/calculus/certificate.hpp"
#include "conprove/harness/corpus.hpp"
#include "conprove/mcts/engine.hpp"
#include "conprove/mcts/proof_game.hpp"

using namespace conprove;
using namespace conprove::mcts;
using testing::matrix_of;

namespace {

// One-step problem with fixed successor weights, for sampling statistics.
struct Fork {
  using State = int;
  std::vector<double> w;
  State initial_state() const { return -1; }
  std::vector<State> successors(const State& s) const {
    std::vector<State> out;
    if (s < 0) {
      for (std::size_t i = 0; i < w.size(); ++i) out.push_back(static_cast<int>(i));
    }
    return out;
  }
  std::vector<double> weights(const State&, const std::vector<State>&) const { return w; }
  double reward(const State&) const { return 0.0; }
  bool is_success(const State&) const { return false; }
};

// Two endless binary subtrees; everything under A rewards 1, under B 0.
struct Arms {
  using State = std::string;
  State initial_state() const { return {}; }
  std::vector<State> successors(const State& s) const {
    if (s.empty()) return {"A", "B"};
    return {s + "0", s + "1"};
  }
  std::vector<double> weights(const State&, const std::vector<State>& next) const {
    return std::vector<double>(next.size(), 1.0);
  }
  double reward(const State& s) const { return s[0] == 'A' ? 1.0 : 0.0; }
  bool is_success(const State&) const { return false; }
};

SearchConfig config(std::uint64_t seed) {
  SearchConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("uct_value") {
  CHECK(uct_value(0.0, 7, 7, 0.0) == 0.0);
  CHECK(std::abs(uct_value(0.5, 1, 2, 1.0) - (0.5 + std::sqrt(2.0 * std::log(2.0)))) < 1e-9);
  CHECK(std::abs(uct_value(0.5, 1, 2, 1.0) - 1.67741) < 1e-5);
  CHECK(uct_value(0.3, 1, 5, 1.0) > uct_value(0.3, 4, 5, 1.0));
}

TEST_CASE("cp_schedule") {
  SearchConfig c;
  c.cp = 1.0;
  CHECK(cp_schedule(17, c) == 1.0);
  c.cp_amplitude = 0.5;
  c.cp_period = 4;
  CHECK(std::abs(cp_schedule(1, c) - 1.5) < 1e-12);
  CHECK(std::abs(cp_schedule(2, c) - 1.0) < 1e-12);
  CHECK(std::abs(cp_schedule(3, c) - 0.5) < 1e-12);
}

TEST_CASE("search configuration is validated") {
  SearchConfig c;
  c.cp = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.cp = 1;
  c.cp_amplitude = 1;
  c.cp_period = 4;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.cp_amplitude = 0.5;
  c.cp_period = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.cp_period = 4;
  c.max_sim_depth = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  CHECK(parse_expansion("best") == Expansion::BestNode);
  CHECK_THROWS(parse_expansion("middle"));
}

TEST_CASE("simulate stops immediately without successors") {
  Fork f{{}};
  Rng rng(1);
  const auto sim = simulate(f, -1, 10, rng);
  CHECK(sim.trajectory.empty());
  CHECK_FALSE(sim.success);
  CHECK(sim.dead_end);
}

TEST_CASE("simulation samples in proportion to the weights") {
  SUBCASE("equal weights") {
    Fork f{{1.0, 1.0}};
    Rng rng(2);
    int second = 0;
    for (int i = 0; i < 10000; ++i) second += simulate(f, -1, 1, rng).trajectory.at(0);
    CHECK(std::abs(second - 5000) <= 150);
  }
  SUBCASE("weights 1 and 3") {
    Fork f{{1.0, 3.0}};
    Rng rng(3);
    int second = 0;
    for (int i = 0; i < 10000; ++i) second += simulate(f, -1, 1, rng).trajectory.at(0);
    CHECK(std::abs(second / 10000.0 - 0.75) <= 0.02);
  }
  SUBCASE("scaling all weights does not change the draws") {
    Fork a{{1.0, 3.0, 2.0}};
    Fork b{{0.5, 1.5, 1.0}};
    Rng ra(9), rb(9);
    for (int i = 0; i < 1000; ++i) CHECK(simulate(a, -1, 1, ra).trajectory == simulate(b, -1, 1, rb).trajectory);
  }
}

TEST_CASE("fresh tree after one iteration") {
  testing::TreeToy toy;
  toy.constant = 0.25;
  Search<testing::TreeToy> s(toy, config(1));
  s.step();
  const auto* root = s.root();
  REQUIRE(root->children.size() == 1);
  CHECK(root->visits == 1);
  CHECK(root->children[0]->visits == 1);
  CHECK(root->reward_sum == 0.25);
  CHECK(root->children[0]->reward_sum == 0.25);
  CHECK(root->unexplored.size() == 1);
}

TEST_CASE("a dead-end child is deleted, and so is a parent it empties") {
  SUBCASE("root keeps another action") {
    testing::TreeToy toy;
    toy.height = 1;
    Search<testing::TreeToy> s(toy, config(4));
    s.step();
    CHECK(s.root()->children.empty());
    CHECK(s.root()->deleted_visits == 1);
    CHECK(s.stats().deletions == 1);
    CHECK(s.status() == Status::Running);
    s.step();
    CHECK(s.root() == nullptr);
    CHECK(s.status() == Status::Exhausted);
  }
  SUBCASE("single action") {
    testing::TreeToy toy;
    toy.height = 1;
    toy.branching = 1;
    Search<testing::TreeToy> s(toy, config(4));
    CHECK(s.step() == Status::Exhausted);
  }
}

TEST_CASE("constant reward keeps root children balanced") {
  testing::TreeToy toy;
  Search<testing::TreeToy> s(toy, config(5));
  for (int i = 0; i < 100; ++i) s.step();
  REQUIRE(s.root()->children.size() == 2);
  const auto a = s.root()->children[0]->visits, b = s.root()->children[1]->visits;
  CHECK((a > b ? a - b : b - a) <= 1);
}

TEST_CASE("run outcomes") {
  SUBCASE("initial success") {
    testing::TreeToy toy;
    toy.goal = "";
    struct Done : testing::TreeToy {
      bool is_success(const State&) const { return true; }
    } done;
    Search<Done> s(done, config(0));
    const auto r = s.run();
    CHECK(r.status == Status::Solution);
    CHECK(r.solution.empty());
    CHECK(r.stats.iterations == 0);
  }
  SUBCASE("two-clause proof within three iterations") {
    const Matrix m = matrix_of("cnf(a, axiom, p).\ncnf(b, axiom, ~p).");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ProofGame game(m, {});
      SearchConfig c = config(seed);
      c.max_iterations = 3;
      Search<ProofGame> s(game, c);
      const auto r = s.run();
      CHECK(r.status == Status::Solution);
      REQUIRE_FALSE(r.solution.empty());
      CHECK(r.solution.back().closed());
    }
  }
  SUBCASE("finite unsolvable tree is exhausted") {
    testing::TreeToy toy;
    toy.branching = 3;
    toy.height = 4;
    SearchConfig c = config(6);
    c.max_sim_depth = 2;
    Search<testing::TreeToy> s(toy, c);
    const auto r = s.run();
    CHECK(r.status == Status::Exhausted);
    CHECK(s.root() == nullptr);
  }
  SUBCASE("iteration limit") {
    testing::TreeToy toy;
    SearchConfig c = config(6);
    c.max_iterations = 10;
    Search<testing::TreeToy> s(toy, c);
    const auto r = s.run();
    CHECK(r.status == Status::IterationLimit);
    CHECK(r.stats.iterations == 10);
  }
  SUBCASE("solution path is a chain of successors") {
    testing::TreeToy toy;
    toy.goal = "1011";
    Search<testing::TreeToy> s(toy, config(8));
    const auto r = s.run();
    REQUIRE(r.status == Status::Solution);
    REQUIRE(r.solution.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.solution[i] == toy.goal.substr(0, i + 1));
  }
}

TEST_CASE("visit counts stay consistent through deletions") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    testing::TreeToy toy;
    toy.branching = 3;
    toy.height = 5;
    toy.constant = -1;
    toy.rng = Rng(seed);
    SearchConfig c = config(seed);
    c.max_sim_depth = 2;
    Search<testing::TreeToy> s(toy, c);
    while (s.step() == Status::Running) {
      REQUIRE(testing::visits_consistent(*s.root()));
    }
    CHECK(s.status() == Status::Exhausted);
  }
}

TEST_CASE("best-node expansion adds the state with the fewest subgoals") {
  testing::LureToy toy;
  SearchConfig c = config(3);
  c.expansion = Expansion::BestNode;
  c.max_sim_depth = 4;
  Search<testing::LureToy> s(toy, c);
  std::vector<IterationRecord> records;
  s.set_observer([&](const IterationRecord& r) { records.push_back(r); });
  for (int i = 0; i < 50 && s.status() == Status::Running; ++i) s.step();
  for (const auto& r : records) {
    if (r.trajectory_length == 0) CHECK(r.expanded_index == 0);
  }
  bool deep = false;
  for (const auto& r : records) deep = deep || r.expanded_index > 0;
  CHECK(deep);
}

TEST_CASE("same seed, same search") {
  const Matrix m = load_matrix(testing::corpus_file("pel17"));
  auto trace = [&](std::uint64_t seed) {
    ProofGame game(m, {});
    SearchConfig c = config(seed);
    c.max_iterations = 500;
    Search<ProofGame> s(game, c);
    std::vector<std::pair<std::size_t, double>> out;
    s.set_observer([&](const IterationRecord& r) { out.emplace_back(r.action_index, r.reward); });
    s.run();
    return out;
  };
  CHECK(trace(7) == trace(7));
}

TEST_CASE("proof game on the corpus") {
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    CAPTURE(info.id);
    const Matrix m = load_matrix(info.path);
    ProofGameConfig gc;
    gc.weights.policy = WeightPolicy::InverseSize;
    ProofGame game(m, gc);
    SearchConfig c = config(11);
    c.max_iterations = 300;
    Search<ProofGame> s(game, c);
    const auto r = s.run();
    if (r.status == Status::Solution) {
      CHECK_FALSE(info.satisfiable());
      const ProverState& last = r.solution.back();
      CHECK(last.closed());
      const CheckResult check = check_proof(m, make_certificate(m, last));
      CHECK(check.accepted);
      CHECK(check.extensions == last.counts().extensions);
      CHECK(game.extensions() >= last.counts().extensions);
    } else if (s.root()) {
      CHECK(testing::visits_consistent(*s.root()));
    }
  }
}

TEST_CASE("inference budget") {
  const Matrix m = load_matrix(testing::corpus_file("pel46"));
  ProofGameConfig gc;
  gc.max_inferences = 20;
  ProofGame game(m, gc);
  Search<ProofGame> s(game, config(1));
  const auto r = s.run();
  CHECK(r.status == Status::BudgetSpent);
  CHECK(game.extensions() >= 20);
}

TEST_CASE("reward kinds") {
  const Matrix m = matrix_of("cnf(a, axiom, p | q).\ncnf(b, axiom, ~p).\ncnf(c, axiom, ~q).");
  const ProverState s0 = ProverState::initial(m);
  ProofGameConfig gc;
  gc.reward = RewardKind::Constant;
  ProofGame constant(m, gc);
  CHECK(constant.reward(s0) == 0.5);
  gc.reward = RewardKind::Random;
  gc.reward_seed = 3;
  ProofGame a(m, gc), b(m, gc);
  for (int i = 0; i < 10; ++i) {
    const double x = a.reward(s0);
    CHECK(x == b.reward(s0));
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
  CHECK(parse_reward_kind("standard") == RewardKind::Standard);
  CHECK_THROWS(parse_reward_kind("generous"));
}

TEST_CASE("a zero-reward arm keeps being visited") {
  Arms arms;
  SearchConfig c = config(1);
  c.expansion = Expansion::FirstNode;
  Search<Arms> s(arms, c);
  std::uint64_t last = 0;
  for (std::uint64_t checkpoint : {1000, 2000, 4000, 8000, 16000}) {
    while (s.stats().iterations < checkpoint) s.step();
    REQUIRE(s.root()->children.size() == 2);
    const auto& kids = s.root()->children;
    const auto* a = kids[0]->state == "A" ? kids[0].get() : kids[1].get();
    const auto* b = kids[0]->state == "B" ? kids[0].get() : kids[1].get();
    CHECK(b->visits > last);
    last = b->visits;
    CHECK(a->visits > b->visits);
  }
}
