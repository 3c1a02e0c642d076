#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "support.hpp"

#include "conprove/harness/corpus.hpp"

using namespace conprove;
using testing::matrix_of;

namespace {

std::string lit_text(const Matrix& m, std::size_t c, std::size_t l) {
  const Clause& cl = m.clause(c);
  return print_literal(m.signature(), cl.literals[l], cl.var_names);
}

std::vector<std::string> skolems(const Signature& sig) {
  std::vector<std::string> out;
  for (SymbolId i = 0; i < sig.size(); ++i) {
    if (sig.name(i).rfind("sk_", 0) == 0) out.push_back(sig.name(i));
  }
  return out;
}

}  // namespace

TEST_CASE("cnf clause maps literals directly") {
  const Problem p = parse_problem("cnf(c1, axiom, p(X) | ~q(a)).");
  REQUIRE(p.declarations.size() == 1);
  const Clause& c = p.declarations[0].clause;
  REQUIRE(c.literals.size() == 2);
  CHECK(c.literals[0].positive);
  CHECK(p.signature.name(c.literals[0].predicate) == "p");
  CHECK(c.literals[0].args[0].is_var());
  CHECK_FALSE(c.literals[1].positive);
  CHECK(p.signature.name(c.literals[1].predicate) == "q");
  CHECK(p.signature.name(c.literals[1].args[0].functor()) == "a");
}

TEST_CASE("fof conjecture is negated before clausification") {
  const Matrix m = clausify(parse_problem("fof(c, conjecture, p)."));
  REQUIRE(m.size() == 1);
  REQUIRE(m.clause(0).literals.size() == 1);
  CHECK_FALSE(m.clause(0).literals[0].positive);
}

TEST_CASE("syntax error reports the position of the unclosed parenthesis") {
  try {
    parse_problem("cnf(c1, axiom, p(X");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 17);
  }
}

TEST_CASE("syntax errors carry the line") {
  try {
    parse_problem("cnf(a, axiom, p).\n\ncnf(b, axiom, q |).");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("unsupported languages are reported") {
  CHECK_THROWS_AS(parse_problem("thf(a, axiom, p)."), UnsupportedError);
  CHECK_THROWS_AS(parse_problem("tff(a, axiom, p)."), UnsupportedError);
}

TEST_CASE("unresolved include is an error") {
  CHECK_THROWS_AS(parse_problem("include('Axioms/NOPE001+0.ax')."), IncludeError);
}

TEST_CASE("include is resolved against the include directory") {
  const auto dir = std::filesystem::temp_directory_path() / "conprove_include_test";
  std::filesystem::create_directories(dir / "Axioms");
  std::ofstream(dir / "Axioms" / "T.ax") << "cnf(ax, axiom, p(a)).\n";
  ParseOptions opts;
  opts.include_dir = dir;
  const Problem p = parse_problem("include('Axioms/T.ax').\ncnf(g, negated_conjecture, ~p(a)).", opts);
  CHECK(p.declarations.size() == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("free variables in fof are rejected") {
  CHECK_THROWS(parse_problem("fof(a, axiom, p(X))."));
}

TEST_CASE("existential becomes a content-named Skolem constant") {
  const char* text = "fof(a, axiom, ? [X] : p(X)).";
  const Matrix m1 = clausify(parse_problem(text));
  const Matrix m2 = clausify(parse_problem(text));
  REQUIRE(m1.size() == 1);
  const auto names = skolems(m1.signature());
  REQUIRE(names.size() == 1);
  CHECK(names == skolems(m2.signature()));
  CHECK(lit_text(m1, 0, 0) == "p(" + names[0] + ")");
}

TEST_CASE("Skolem function under a universal has arity one") {
  const Matrix m = clausify(parse_problem("fof(a, axiom, ! [X] : (p(X) | ? [Y] : q(X, Y)))."));
  REQUIRE(m.size() == 1);
  const Clause& c = m.clause(0);
  REQUIRE(c.literals.size() == 2);
  const Term& sk = c.literals[1].args[1];
  REQUIRE_FALSE(sk.is_var());
  CHECK(sk.args().size() == 1);
  CHECK(sk.args()[0] == c.literals[1].args[0]);
  CHECK(c.literals[0].args[0] == c.literals[1].args[0]);
}

TEST_CASE("the same formula in two problems gets the same Skolem names") {
  const Matrix a = clausify(parse_problem("fof(x, axiom, ! [X] : ? [Y] : r(X, Y)).\nfof(g, conjecture, s)."));
  const Matrix b = clausify(
      parse_problem("fof(other, axiom, t(b)).\nfof(y, axiom, ! [X] : ? [Y] : r(X, Y)).\nfof(h, conjecture, u(c))."));
  CHECK_FALSE(skolems(a.signature()).empty());
  CHECK(skolems(a.signature()) == skolems(b.signature()));
}

TEST_CASE("skolem_name depends on the formula text and the index") {
  CHECK(skolem_name("abc", 0) == skolem_name("abc", 0));
  CHECK(skolem_name("abc", 0) != skolem_name("abc", 1));
  CHECK(skolem_name("abc", 0) != skolem_name("abd", 0));
}

TEST_CASE("clausification drops tautologies and merges repeated literals") {
  const Matrix m = clausify(parse_problem("fof(a, axiom, (p | p | q)).\nfof(b, axiom, (r | ~r))."));
  REQUIRE(m.size() == 1);
  CHECK(m.clause(0).literals.size() == 2);
}

TEST_CASE("prepare_matrix adds the start marker to positive clauses") {
  SUBCASE("{p}, {~p}") {
    const Matrix m = matrix_of("cnf(a, axiom, p).\ncnf(b, axiom, ~p).");
    REQUIRE(m.clause(0).literals.size() == 2);
    CHECK(m.clause(0).literals[0] == top_literal(false));
    CHECK(m.clause(1).literals.size() == 1);
  }
  SUBCASE("no positive clause") {
    const Matrix m = matrix_of("cnf(a, axiom, ~p).\ncnf(b, axiom, p | ~q).");
    CHECK(m.clause(0).literals.size() == 1);
    CHECK(m.clause(1).literals.size() == 2);
    CHECK_FALSE(m.has_positive_clause());
  }
  SUBCASE("two positive clauses") {
    const Matrix m = matrix_of("cnf(a, axiom, p).\ncnf(b, axiom, q | r).");
    CHECK(m.clause(0).literals.size() == 2);
    CHECK(m.clause(1).literals.size() == 3);
    CHECK(m.clause(1).literals[0].is_top());
  }
  SUBCASE("idempotent") {
    const Matrix m = matrix_of("cnf(a, axiom, p).");
    CHECK(prepare_matrix(m).print() == m.print());
  }
}

TEST_CASE("corpus: print then parse gives an equal problem") {
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    CAPTURE(info.id);
    const Problem p = parse_problem_file(info.path);
    const Problem q = parse_problem(print_problem(p));
    CHECK(problems_equal(p, q));
  }
}

TEST_CASE("corpus: every literal is indexed once under its complement key") {
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    CAPTURE(info.id);
    const Matrix m = load_matrix(info.path);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
    for (SymbolId pred = 0; pred < m.signature().size(); ++pred) {
      for (bool pos : {true, false}) {
        for (const IndexEntry& e : m.candidates(pred, pos)) {
          const Literal& l = m.clause(e.clause).literals[e.literal];
          CHECK(l.predicate == pred);
          CHECK(l.positive != pos);
          ++seen[{e.clause, e.literal}];
        }
      }
    }
    std::size_t total = 0;
    for (const Clause& c : m.clauses()) total += c.literals.size();
    CHECK(seen.size() == total);
    for (const auto& [k, n] : seen) CHECK(n == 1);
  }
}

TEST_CASE("corpus: every problem has a status header") {
  const auto corpus = list_corpus(testing::corpus_dir());
  CHECK(corpus.size() >= 40);
  for (const ProblemInfo& info : corpus) {
    CAPTURE(info.id);
    CHECK((info.theorem() || info.satisfiable()));
    CHECK(info.depth.has_value());
  }
}

TEST_CASE("equality axioms are added only on request") {
  const char* text = "cnf(a, axiom, f(a) = b).\ncnf(b, negated_conjecture, ~p(f(a))).";
  const Matrix plain = clausify(parse_problem(text));
  ClausifyOptions opts;
  opts.equality_axioms = true;
  const Matrix eq = clausify(parse_problem(text), opts);
  CHECK(plain.size() == 2);
  CHECK(eq.size() > plain.size());
}

TEST_CASE("corpus: clausification is deterministic and marks each positive clause once") {
  for (const ProblemInfo& info : list_corpus(testing::corpus_dir())) {
    CAPTURE(info.id);
    const Problem p = parse_problem_file(info.path);
    const Matrix a = clausify(p), b = clausify(parse_problem_file(info.path));
    CHECK(a.print() == b.print());
    const Matrix prepared = prepare_matrix(a);
    REQUIRE(prepared.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& before = a.clause(i).literals;
      const auto& after = prepared.clause(i).literals;
      const auto marks = std::count_if(after.begin(), after.end(), [](const Literal& l) { return l.is_top(); });
      CHECK(marks == (a.clause(i).is_positive() ? 1 : 0));
      CHECK(after.size() == before.size() + static_cast<std::size_t>(marks));
    }
  }
}
