#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "conprove/syntax/clause.hpp"

namespace conprove {

enum class FormulaKind { True, False, Atom, Not, And, Or, Implies, Iff, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// First-order formula over atoms. Variables inside atoms are indices into the
// owning declaration's variable table; each quantifier binds fresh indices.
struct Formula {
  FormulaKind kind = FormulaKind::True;
  Literal atom;  // Atom only; always positive
  std::vector<FormulaPtr> children;
  std::vector<VarIndex> bound;  // Forall/Exists only

  static FormulaPtr make_atom(Literal atom);
  static FormulaPtr make_constant(bool value);
  static FormulaPtr make_not(FormulaPtr f);
  static FormulaPtr make_binary(FormulaKind kind, FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_quantifier(FormulaKind kind, std::vector<VarIndex> vars, FormulaPtr body);

  bool is_quantifier() const { return kind == FormulaKind::Forall || kind == FormulaKind::Exists; }
};

bool formulas_equal(const Formula& a, const Formula& b);
std::set<VarIndex> free_variables(const Formula& f);

enum class Language { Cnf, Fof };

struct Declaration {
  std::string name;
  std::string role;
  Language language = Language::Cnf;
  FormulaPtr formula;  // fof
  Clause clause;       // cnf
  std::vector<std::string> var_names;

  bool is_conjecture() const { return role == "conjecture"; }
};

struct Problem {
  Signature signature;
  std::vector<Declaration> declarations;
};

bool problems_equal(const Problem& a, const Problem& b);

}  // namespace conprove
