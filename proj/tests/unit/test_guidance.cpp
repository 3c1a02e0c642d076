#include <cmath>

#include "doctest.h"
#include "support.hpp"

#include "conprove/guidance/reward.hpp"
#include "conprove/guidance/weights.hpp"
#include "conprove/harness/corpus.hpp"

using namespace conprove;
using testing::matrix_of;

namespace {

constexpr double kTol = 1e-12;

// Goal p opened by the start step, with extension candidates of sizes 2, 3
// and 5.
Matrix sized_matrix() {
  return matrix_of(
      "cnf(s, axiom, p).\n"
      "cnf(c2, axiom, ~p | q1).\n"
      "cnf(c3, axiom, ~p | q1 | q2).\n"
      "cnf(c5, axiom, ~p | q1 | q2 | q3 | q4).\n");
}

std::vector<Successor> after_start(const Matrix& m) {
  const auto first = successors(ProverState::initial(m), m);
  REQUIRE(first.size() == 1);
  return successors(first[0].state, m);
}

}  // namespace

TEST_CASE("transition weights by policy") {
  const Matrix m = sized_matrix();
  const auto next = after_start(m);
  REQUIRE(next.size() == 3);
  WeightConfig cfg;
  cfg.policy = WeightPolicy::Constant;
  auto w = transition_weights(m, next, cfg);
  CHECK(w == std::vector<double>{1.0, 1.0, 1.0});
  cfg.policy = WeightPolicy::InverseSize;
  w = transition_weights(m, next, cfg);
  CHECK(w[0] == doctest::Approx(0.5).epsilon(kTol));
  CHECK(w[1] == doctest::Approx(1.0 / 3).epsilon(kTol));
  CHECK(w[2] == doctest::Approx(0.2).epsilon(kTol));
  cfg.policy = WeightPolicy::Rank;
  w = transition_weights(m, next, cfg);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 0.5);
  CHECK(w[2] == doctest::Approx(1.0 / 3).epsilon(kTol));
}

TEST_CASE("inverse size of a four-literal clause") {
  const Matrix m = matrix_of("cnf(s, axiom, p).\ncnf(c4, axiom, ~p | a | b | c).");
  const auto next = after_start(m);
  REQUIRE(next.size() == 1);
  WeightConfig cfg;
  cfg.policy = WeightPolicy::InverseSize;
  CHECK(transition_weights(m, next, cfg)[0] == 0.25);
  CHECK(weight_size(m.clause(0)) == 1);
}

TEST_CASE("reductions and lemmas get the reduction weight under every policy") {
  const Matrix m = matrix_of("cnf(a, axiom, q).\ncnf(b, axiom, ~q | s).\ncnf(c, axiom, ~s | ~q).");
  ProverState s = ProverState::initial(m);
  s = successors(s, m)[0].state;
  s = successors(s, m)[0].state;
  s = successors(s, m)[0].state;
  const auto next = successors(s, m);
  REQUIRE(next[0].action.kind == Action::Kind::Reduction);
  for (auto p : {WeightPolicy::Constant, WeightPolicy::InverseSize, WeightPolicy::Rank}) {
    WeightConfig cfg{p, 0.7};
    CHECK(transition_weights(m, next, cfg)[0] == 0.7);
  }
}

TEST_CASE("weights are positive on the corpus") {
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    const Matrix m = load_matrix(info.path);
    mcts::Rng rng(2);
    ProverState s = ProverState::initial(m);
    for (int i = 0; i < 30 && !s.closed(); ++i) {
      const auto next = successors(s, m);
      if (next.empty()) break;
      for (auto p : {WeightPolicy::Constant, WeightPolicy::InverseSize, WeightPolicy::Rank}) {
        for (double w : transition_weights(m, next, WeightConfig{p, 1.0})) CHECK(w > 0.0);
      }
      s = next[rng.next() % next.size()].state;
    }
  }
}

TEST_CASE("subgoal ratio") {
  const Matrix m = sized_matrix();
  const ProverState s0 = ProverState::initial(m);
  CHECK(subgoal_ratio_reward(s0) == 0.0);
  CHECK(subgoal_ratio_reward(s0, true) == 1.0);

  // Find states with open=2, opened=5 and closed states by random descent.
  bool found_mid = false, found_closed = false;
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    const Matrix pm = load_matrix(info.path);
    mcts::Rng rng(4);
    for (int run = 0; run < 50; ++run) {
      ProverState s = ProverState::initial(pm);
      for (int i = 0; i < 40 && !s.closed(); ++i) {
        const auto next = successors(s, pm);
        if (next.empty()) break;
        s = next[rng.next() % next.size()].state;
        if (s.open_count() == 2 && s.opened_total() == 5) {
          found_mid = true;
          CHECK(subgoal_ratio_reward(s) == doctest::Approx(0.6).epsilon(kTol));
        }
        if (s.open_count() == 4 && s.opened_total() == 4) CHECK(subgoal_ratio_reward(s) == 0.0);
      }
      if (s.closed()) {
        found_closed = true;
        CHECK(subgoal_ratio_reward(s) == 1.0);
      }
    }
  }
  CHECK(found_mid);
  CHECK(found_closed);
}

TEST_CASE("certainty and literal provability") {
  CHECK(certainty(3, 1, 2) == doctest::Approx(0.9).epsilon(kTol));
  CHECK(literal_provability(0, 0, 1, 2) == 1.0);
  CHECK(literal_provability(7, 0, 0.3, 1.5) == 1.0);
  CHECK(std::abs(literal_provability(0, 3, 1, 2) - 0.1) < kTol);
  CHECK(std::abs(literal_provability(1, 1, 1, 2) - (1 + (1 - 1.0 / 5) * (0.5 - 1))) < kTol);
}

TEST_CASE("certainty and provability are monotone") {
  mcts::Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const double c = rng.uniform();
    const double d = 0.1 + 4 * rng.uniform();
    const double x = 100 * rng.uniform();
    const double y = x + 1 + 10 * rng.uniform();
    CHECK(certainty(x, c, d) <= certainty(y, c, d));
    CHECK(certainty(x, c, d) >= 1 - c - kTol);
    CHECK(certainty(x, c, d) < 1.0 + kTol);
    const auto p = rng.next() % 50, n = rng.next() % 50;
    const double base = literal_provability(p, n, c, d);
    CHECK(base >= 0.0);
    CHECK(base <= 1.0);
    if (p + n > 0) {
      CHECK(literal_provability(p + 1, n, c, d) >= base - kTol);
      CHECK(literal_provability(p, n + 1, c, d) <= base + kTol);
    }
  }
}

TEST_CASE("combiners") {
  const std::vector<double> v{0.5, 1.0};
  CHECK(combine(v, Combiner::Min) == 0.5);
  CHECK(combine(v, Combiner::Product) == 0.5);
  CHECK(combine(v, Combiner::Arithmetic) == 0.75);
  CHECK(std::abs(combine(v, Combiner::Geometric) - std::sqrt(0.5)) < 1e-9);
  CHECK(std::abs(combine(v, Combiner::Harmonic) - 2.0 / 3.0) < 1e-9);
  const std::vector<double> z{0.3, 0.0, 0.9};
  for (auto c : {Combiner::Product, Combiner::Min, Combiner::Harmonic, Combiner::Geometric}) {
    CHECK(combine(z, c) == 0.0);
  }
  for (auto c : {Combiner::Product, Combiner::Min, Combiner::Harmonic, Combiner::Geometric, Combiner::Arithmetic}) {
    CHECK(combine({}, c) == 1.0);
    CHECK(parse_combiner(to_string(c)) == c);
  }
}

TEST_CASE("mean inequalities on random inputs") {
  mcts::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> v(1 + rng.next() % 8);
    for (double& x : v) x = rng.uniform();
    const double mn = combine(v, Combiner::Min);
    const double h = combine(v, Combiner::Harmonic);
    const double g = combine(v, Combiner::Geometric);
    const double a = combine(v, Combiner::Arithmetic);
    CHECK(mn <= h + kTol);
    CHECK(h <= g + kTol);
    CHECK(g <= a + kTol);
    CHECK(combine(v, Combiner::Product) <= mn + kTol);
  }
}

TEST_CASE("reward configuration is validated") {
  RewardConfig c;
  CHECK_NOTHROW(validate(c));
  c.ratio_weight = 0.7;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.model_weight = 0.3;
  CHECK_NOTHROW(validate(c));
  c.cert_c = 1.5;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.cert_c = 1;
  c.cert_d = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("provability table and reward") {
  const Matrix m = matrix_of("cnf(s, axiom, a | b).\ncnf(x, axiom, ~a).\ncnf(y, axiom, ~b).");
  Store store;
  store.add(key_of(m.signature(), m.clause(0).literals[1], m.clause(0)), Stats{1, 1});
  store.add(key_of(m.signature(), m.clause(0).literals[2], m.clause(0)), Stats{4, 1});
  RewardConfig cfg;
  cfg.cert_c = 0;  // certainty 1: provability is the success rate
  const ProvabilityTable table(m, ProvabilityModel(store), cfg);
  CHECK(table.literal(0, 0) == 1.0);
  CHECK(table.literal(0, 1) == 0.5);
  CHECK(table.literal(0, 2) == doctest::Approx(0.8).epsilon(kTol));
  CHECK(table.literal(1, 0) == 1.0);

  const ProverState s0 = ProverState::initial(m);
  CHECK(table.state(s0) == 1.0);
  const ProverState s1 = successors(s0, m)[0].state;
  REQUIRE(s1.open_count() == 1);
  CHECK(table.goal(s1.current()) == doctest::Approx(0.4).epsilon(kTol));
  CHECK(table.state(s1) == doctest::Approx(0.4).epsilon(kTol));
  CHECK(table.reward(s1) == doctest::Approx(0.5 * subgoal_ratio_reward(s1) + 0.5 * 0.4).epsilon(kTol));

  RewardConfig ratio_only = cfg;
  ratio_only.ratio_weight = 1;
  ratio_only.model_weight = 0;
  const ProvabilityTable t2(m, ProvabilityModel(store), ratio_only);
  CHECK(t2.reward(s1) == subgoal_ratio_reward(s1));

  // Empty model on a closed state scores 1.
  const ProvabilityTable empty(m, ProvabilityModel{}, RewardConfig{});
  ProverState s = s1;
  while (!s.closed()) s = successors(s, m).at(0).state;
  CHECK(empty.reward(s) == 1.0);
}

TEST_CASE("linear combination of the two components") {
  // 0.5 * 0.6 + 0.5 * 0.1
  CHECK(std::abs((0.5 * 0.6 + 0.5 * 0.1) - 0.35) < kTol);
  const Matrix m = matrix_of("cnf(s, axiom, a | b).\ncnf(x, axiom, ~a | c).\ncnf(y, axiom, ~b).");
  Store store;
  store.add(key_of(m.signature(), m.clause(1).literals[1], m.clause(1)), Stats{0, 3});
  const ProvabilityTable table(m, ProvabilityModel(store), RewardConfig{});
  mcts::Rng rng(1);
  ProverState s = ProverState::initial(m);
  while (!s.closed()) {
    const double expect = 0.5 * subgoal_ratio_reward(s) + 0.5 * table.state(s);
    CHECK(std::abs(table.reward(s) - expect) < kTol);
    const auto next = successors(s, m);
    if (next.empty()) break;
    s = next[rng.next() % next.size()].state;
  }
}
