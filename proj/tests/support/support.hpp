#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "conprove/calculus/unify.hpp"
#include "conprove/mcts/uct.hpp"
#include "conprove/syntax/matrix.hpp"
#include "conprove/syntax/tptp.hpp"

namespace testing {

using namespace conprove;

inline std::string corpus_dir() { return CONPROVE_CORPUS_DIR; }
inline std::string corpus_file(const std::string& id) { return corpus_dir() + "/" + id + ".p"; }

inline Matrix matrix_of(std::string_view text) { return prepare_matrix(clausify(parse_problem(text))); }

// Robinson unification on explicit terms, applying the substitution
// eagerly after every binding. Slow and obviously correct.
class ReferenceUnifier {
 public:
  using Map = std::map<VarIndex, Term>;

  static Term apply(const Map& s, const Term& t) {
    if (t.is_var()) {
      auto it = s.find(t.var());
      return it == s.end() ? t : it->second;
    }
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(apply(s, a));
    return Term::apply(t.functor(), std::move(args));
  }

  static bool occurs(VarIndex v, const Term& t) {
    if (t.is_var()) return t.var() == v;
    for (const Term& a : t.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  static std::optional<Map> unify(const Term& s, const Term& t) {
    Map sigma;
    while (true) {
      const Term a = apply(sigma, s);
      const Term b = apply(sigma, t);
      if (a == b) return sigma;
      auto d = disagreement(a, b);
      if (!d) return std::nullopt;
      auto [x, y] = *d;
      if (!x.is_var()) std::swap(x, y);
      if (!x.is_var() || occurs(x.var(), y)) return std::nullopt;
      Map single{{x.var(), y}};
      for (auto& [v, u] : sigma) u = apply(single, u);
      sigma[x.var()] = y;
    }
  }

 private:
  static std::optional<std::pair<Term, Term>> disagreement(const Term& a, const Term& b) {
    if (a == b) return std::nullopt;
    if (a.is_var() || b.is_var()) return std::make_pair(a, b);
    if (a.functor() != b.functor() || a.args().size() != b.args().size()) return std::make_pair(a, b);
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      if (!(a.args()[i] == b.args()[i])) return disagreement(a.args()[i], b.args()[i]);
    }
    return std::nullopt;
  }
};

// Renames variables to 0, 1, ... by first occurrence.
inline Term canonical(const Term& t, std::map<VarIndex, VarIndex>& names) {
  if (t.is_var()) {
    auto [it, fresh] = names.emplace(t.var(), static_cast<VarIndex>(names.size()));
    return Term::variable(it->second);
  }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(canonical(a, names));
  return Term::apply(t.functor(), std::move(args));
}

inline bool variants(const Term& a, const Term& b) {
  std::map<VarIndex, VarIndex> na, nb;
  return canonical(a, na) == canonical(b, nb);
}

// Random terms over f/1, g/2, h/3, constants a, b and variables 0..vars-1.
// Symbol ids are 1..5 in that order.
inline Term random_term(mcts::Rng& rng, int depth, VarIndex vars) {
  const auto r = rng.next() % 10;
  if (depth == 0 || r < 3) return Term::variable(static_cast<VarIndex>(rng.next() % vars));
  if (r < 5) return Term::apply(4 + static_cast<SymbolId>(rng.next() % 2));
  const SymbolId f = 1 + static_cast<SymbolId>(rng.next() % 3);
  std::vector<Term> args;
  for (SymbolId i = 0; i < f; ++i) args.push_back(random_term(rng, depth - 1, vars));
  return Term::apply(f, std::move(args));
}

struct OracleResult {
  std::size_t cases = 0;
  std::size_t disagreements = 0;
  std::size_t unifiable = 0;
  std::string first_failure;
};

// Compares unify() with the reference unifier on random pairs and on fixed
// occurs-check cases.
inline OracleResult run_unification_oracle(std::size_t count, std::uint64_t seed) {
  OracleResult res;
  mcts::Rng rng(seed);
  auto check = [&](const Term& s, const Term& t) {
    ++res.cases;
    const auto mine = unify(Substitution{}, BoundTerm{s.node(), 0}, BoundTerm{t.node(), 0});
    const auto ref = ReferenceUnifier::unify(s, t);
    bool ok = mine.has_value() == ref.has_value();
    if (ok && mine) {
      ++res.unifiable;
      const Term ms = instantiate(*mine, BoundTerm{s.node(), 0});
      const Term mt = instantiate(*mine, BoundTerm{t.node(), 0});
      const Term rs = ReferenceUnifier::apply(*ref, s);
      ok = ms == mt && variants(ms, rs);
    }
    if (!ok) {
      if (res.disagreements == 0) res.first_failure = "case " + std::to_string(res.cases);
      ++res.disagreements;
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    const int d1 = static_cast<int>(rng.next() % 5);
    const int d2 = static_cast<int>(rng.next() % 5);
    const Term s = random_term(rng, d1, 4);
    const Term t = random_term(rng, d2, 4);
    check(s, t);
  }
  const Term x = Term::variable(0), y = Term::variable(1);
  check(x, Term::apply(1, {x}));
  check(Term::apply(2, {x, y}), Term::apply(2, {y, Term::apply(1, {x})}));
  check(Term::apply(2, {x, Term::apply(1, {y})}), Term::apply(2, {Term::apply(1, {y}), x}));
  check(Term::apply(3, {x, y, x}), Term::apply(3, {Term::apply(1, {y}), Term::apply(1, {x}), y}));
  return res;
}

}  // namespace testing
