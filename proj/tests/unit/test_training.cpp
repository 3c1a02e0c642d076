#include <set>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "conprove/harness/corpus.hpp"
#include "conprove/training/store.hpp"

using namespace conprove;
using testing::matrix_of;

namespace {

LiteralKey key(const Matrix& m, std::size_t c, std::size_t l) {
  return key_of(m.signature(), m.clause(c).literals[l], m.clause(c));
}

Store random_store(mcts::Rng& rng, std::size_t size, std::uint64_t key_space, std::uint64_t max_count) {
  Store s;
  for (std::size_t i = 0; i < size; ++i) {
    const LiteralKey k{rng.next() % key_space, rng.next() % key_space};
    s.add(k, Stats{rng.next() % max_count, rng.next() % max_count});
  }
  return s;
}

std::size_t find_clause(const Matrix& m, const std::string& name) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.clause(i).name == name) return i;
  }
  FAIL("no clause " << name);
  return 0;
}

}  // namespace

TEST_CASE("keys are invariant under variable renaming") {
  const Matrix a = matrix_of("cnf(c, axiom, p(X) | ~q(X)).");
  const Matrix b = matrix_of("cnf(d, axiom, p(Y) | ~q(Y)).");
  CHECK(key(a, 0, 0) == key(b, 0, 0));
  CHECK(key(a, 0, 1) == key(b, 0, 1));
  CHECK(key(a, 0, 0) != key(a, 0, 1));
}

TEST_CASE("the clause participates in the key") {
  const Matrix m = matrix_of("cnf(a, axiom, p(X) | q(X)).\ncnf(b, axiom, p(X) | r(X)).");
  const LiteralKey ka = key(m, 0, 1), kb = key(m, 1, 1);
  CHECK(ka.literal_hash == kb.literal_hash);
  CHECK(ka.clause_hash != kb.clause_hash);
}

TEST_CASE("keys distinguish polarity, symbols and variable sharing") {
  const Matrix m = matrix_of(
      "cnf(a, axiom, ~p(X) | s).\n"
      "cnf(b, axiom, p(X, X) | s).\n"
      "cnf(c, axiom, p(X, Y) | s).\n"
      "cnf(d, axiom, p(f(X)) | s).\n"
      "cnf(e, axiom, p(g(X)) | s).\n");
  std::set<std::uint64_t> literal_hashes;
  for (std::size_t c = 0; c < m.size(); ++c) {
    const auto& lits = m.clause(c).literals;
    for (std::size_t l = 0; l < lits.size(); ++l) {
      if (!lits[l].is_top() && lits[l].args.size() > 0) literal_hashes.insert(key(m, c, l).literal_hash);
    }
  }
  CHECK(literal_hashes.size() == 5);
}

TEST_CASE("canonical layout") {
  const Matrix m = matrix_of("cnf(a, axiom, ~p(X, f(Y, X))).");
  const std::string bytes = canonical_literal(m.signature(), m.clause(0).literals[0]);
  using namespace std::string_literals;
  const std::string expect = "-p\0"s + "\x02\0\0\0"s + "V\0\0\0\0"s + "Ff\0"s + "\x02\0\0\0"s + "V\x01\0\0\0"s +
                             "V\0\0\0\0"s;
  CHECK(bytes == expect);
  CHECK(canonical_clause(m.signature(), m.clause(0)) == "C" + expect);
}

TEST_CASE("the start marker is not part of the clause key") {
  const Matrix raw = clausify(parse_problem("cnf(a, axiom, p | q)."));
  const Matrix prepared = prepare_matrix(raw);
  CHECK(canonical_clause(raw.signature(), raw.clause(0)) ==
        canonical_clause(prepared.signature(), prepared.clause(0)));
}

TEST_CASE("a shared axiom has the same keys in different problems") {
  const Matrix a = load_matrix(testing::corpus_file("socrates"));
  const Matrix b = load_matrix(testing::corpus_file("plato"));
  const auto ca = find_clause(a, "men_are_mortal"), cb = find_clause(b, "men_are_mortal");
  CHECK(key(a, ca, 0) == key(b, cb, 0));
  CHECK(key(a, ca, 1) == key(b, cb, 1));
}

TEST_CASE("a shared fof axiom keeps its Skolem names and keys") {
  const char* axiom = "fof(ax, axiom, ! [X] : (p(X) => ? [Y] : r(X, Y))).\n";
  const Matrix m1 = matrix_of(std::string(axiom) + "fof(g, conjecture, ? [Z] : r(c, Z)).");
  const Matrix m2 = matrix_of(std::string("fof(other, axiom, p(c)).\n") + axiom + "fof(g, conjecture, q).");
  const auto c1 = find_clause(m1, "ax"), c2 = find_clause(m2, "ax");
  const auto& l1 = m1.clause(c1).literals;
  const auto& l2 = m2.clause(c2).literals;
  REQUIRE(l1.size() == l2.size());
  for (std::size_t i = 0; i < l1.size(); ++i) CHECK(key(m1, c1, i) == key(m2, c2, i));
}

TEST_CASE("no key collisions on the corpus") {
  std::map<LiteralKey, std::string> seen;
  std::size_t distinct = 0;
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    const Matrix m = load_matrix(info.path);
    for (std::size_t c = 0; c < m.size(); ++c) {
      const std::string clause_bytes = canonical_clause(m.signature(), m.clause(c));
      const auto& lits = m.clause(c).literals;
      for (std::size_t l = 0; l < lits.size(); ++l) {
        if (lits[l].is_top()) continue;
        const std::string canon = canonical_literal(m.signature(), lits[l]) + '\x1e' + clause_bytes;
        auto [it, fresh] = seen.emplace(key(m, c, l), canon);
        if (fresh) ++distinct;
        CHECK(it->second == canon);
      }
    }
  }
  CHECK(distinct > 300);
}

TEST_CASE("recording events") {
  Store s;
  const LiteralKey k{1, 2};
  s.record(TrainingEvent{k, true});
  s.record(std::vector<TrainingEvent>{{k, true}, {k, false}});
  CHECK(s.get(k) == Stats{2, 1});
  CHECK(s.get(LiteralKey{9, 9}) == Stats{0, 0});
}

TEST_CASE("merge adds counts") {
  const LiteralKey k{1, 2};
  Store a, b;
  a.add(k, {2, 1});
  b.add(k, {3, 0});
  CHECK(merge(a, b).get(k) == Stats{5, 1});
  CHECK(merge(a, Store{}) == a);
}

TEST_CASE("merge is a commutative monoid") {
  mcts::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Store a = random_store(rng, rng.next() % 30, 16, 100);
    const Store b = random_store(rng, rng.next() % 30, 16, 100);
    const Store c = random_store(rng, rng.next() % 30, 16, 100);
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
    CHECK(merge(a, Store{}) == a);
    CHECK(merge(Store{}, a) == a);
  }
}

TEST_CASE("counts saturate at the ceiling") {
  Store s;
  const LiteralKey k{1, 1};
  s.add(k, {Store::kCeiling - 1, 0});
  CHECK_FALSE(s.saturated());
  s.add(k, {5, 0});
  CHECK(s.saturated());
  CHECK(s.get(k).p == Store::kCeiling);
  Store t;
  t.merge(s);
  CHECK(t.saturated());
}

TEST_CASE("persisted text format") {
  Store s;
  s.add(LiteralKey{1, 2}, {5, 1});
  CHECK(s.persist() == "0000000000000001 0000000000000002 5 1\n");
  CHECK(Store{}.persist().empty());
  Store z;
  z.add(LiteralKey{3, 3}, {0, 0});
  CHECK(z.persist().empty());
  Store sorted;
  sorted.add(LiteralKey{0xff, 0}, {1, 0});
  sorted.add(LiteralKey{0x10, 7}, {0, 1});
  CHECK(sorted.persist() == "0000000000000010 0000000000000007 0 1\n00000000000000ff 0000000000000000 1 0\n");
}

TEST_CASE("persist then load is the identity") {
  mcts::Rng rng(33);
  const Store s = random_store(rng, 10000, UINT64_MAX, 1000000);
  std::istringstream in(s.persist());
  const Store t = Store::load(in);
  CHECK(t == s);
  CHECK(t.persist() == s.persist());
}

TEST_CASE("malformed lines are reported with their number") {
  const char* cases[] = {
      "0000000000000001 0000000000000002 5 1\nnot a line\n",
      "0000000000000001 0000000000000002 5 1\n0000000000000001 0000000000000003 5\n",
      "0000000000000001 0000000000000002 5 1\n00000000000000zz 0000000000000002 5 1\n",
      "0000000000000001 0000000000000002 5 1\n0000000000000001 0000000000000002 -5 1\n",
  };
  for (const char* text : cases) {
    CAPTURE(text);
    std::istringstream in(text);
    try {
      Store::load(in);
      FAIL("expected a format error");
    } catch (const StoreFormatError& e) {
      CHECK(e.line() == 2);
    }
  }
}
