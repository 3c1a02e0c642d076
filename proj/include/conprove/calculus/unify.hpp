#pragma once

#include <optional>

#include "conprove/calculus/substitution.hpp"
#include "conprove/syntax/clause.hpp"

namespace conprove {

struct BoundLiteral {
  const Literal* literal = nullptr;
  std::uint32_t offset = 0;

  bool positive() const { return literal->positive; }
  SymbolId predicate() const { return literal->predicate; }
  bool is_top() const { return literal->is_top(); }
};

// Follows variable bindings until reaching an unbound variable or an
// application.
BoundTerm resolve(const Substitution& sigma, BoundTerm t);

bool occurs(const Substitution& sigma, VarId v, BoundTerm t);

// Most general unifier extending sigma, with occurs check. sigma itself is
// never modified.
std::optional<Substitution> unify(const Substitution& sigma, BoundTerm s, BoundTerm t);

// Unifies the atoms of two literals; polarity is not compared. Predicates and
// arities are expected to match (the caller goes through the index).
std::optional<Substitution> unify_atoms(const Substitution& sigma, BoundLiteral a, BoundLiteral b);

// Syntactic identity after applying sigma.
bool identical(const Substitution& sigma, BoundTerm s, BoundTerm t);
bool identical(const Substitution& sigma, BoundLiteral a, BoundLiteral b);

// Fully applies sigma, producing a term whose variable indices are global ids.
Term instantiate(const Substitution& sigma, BoundTerm t);
Literal instantiate(const Substitution& sigma, BoundLiteral l);

}  // namespace conprove
