#include "conprove/syntax/formula.hpp"

namespace conprove {

FormulaPtr Formula::make_atom(Literal atom) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Atom;
  atom.positive = true;
  f->atom = std::move(atom);
  return f;
}

FormulaPtr Formula::make_constant(bool value) {
  auto f = std::make_shared<Formula>();
  f->kind = value ? FormulaKind::True : FormulaKind::False;
  return f;
}

FormulaPtr Formula::make_not(FormulaPtr sub) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Not;
  f->children.push_back(std::move(sub));
  return f;
}

FormulaPtr Formula::make_binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->children = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::make_quantifier(FormulaKind kind, std::vector<VarIndex> vars, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->bound = std::move(vars);
  f->children.push_back(std::move(body));
  return f;
}

bool formulas_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.bound != b.bound || a.children.size() != b.children.size()) return false;
  if (a.kind == FormulaKind::Atom && !(a.atom == b.atom)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!formulas_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

namespace {

void collect_vars(const Term& t, std::set<VarIndex>& out) {
  if (t.is_var()) {
    out.insert(t.var());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

}  // namespace

std::set<VarIndex> free_variables(const Formula& f) {
  std::set<VarIndex> out;
  if (f.kind == FormulaKind::Atom) {
    for (const auto& a : f.atom.args) collect_vars(a, out);
    return out;
  }
  for (const auto& c : f.children) {
    auto sub = free_variables(*c);
    out.insert(sub.begin(), sub.end());
  }
  for (auto v : f.bound) out.erase(v);
  return out;
}

bool problems_equal(const Problem& a, const Problem& b) {
  if (a.declarations.size() != b.declarations.size()) return false;
  // Symbol ids may differ between signatures, so compare through names.
  auto same_term = [&](auto&& self, const Term& x, const Term& y) -> bool {
    if (x.is_var() != y.is_var()) return false;
    if (x.is_var()) return x.var() == y.var();
    if (a.signature.name(x.functor()) != b.signature.name(y.functor())) return false;
    if (x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i) {
      if (!self(self, x.args()[i], y.args()[i])) return false;
    }
    return true;
  };
  auto same_literal = [&](const Literal& x, const Literal& y) {
    if (x.positive != y.positive || x.args.size() != y.args.size()) return false;
    if (a.signature.name(x.predicate) != b.signature.name(y.predicate)) return false;
    for (std::size_t i = 0; i < x.args.size(); ++i) {
      if (!same_term(same_term, x.args[i], y.args[i])) return false;
    }
    return true;
  };
  auto same_formula = [&](auto&& self, const Formula& x, const Formula& y) -> bool {
    if (x.kind != y.kind || x.bound != y.bound || x.children.size() != y.children.size()) return false;
    if (x.kind == FormulaKind::Atom && !same_literal(x.atom, y.atom)) return false;
    for (std::size_t i = 0; i < x.children.size(); ++i) {
      if (!self(self, *x.children[i], *y.children[i])) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < a.declarations.size(); ++i) {
    const auto& x = a.declarations[i];
    const auto& y = b.declarations[i];
    if (x.name != y.name || x.role != y.role || x.language != y.language) return false;
    if (x.language == Language::Fof) {
      if (!same_formula(same_formula, *x.formula, *y.formula)) return false;
    } else {
      if (x.clause.literals.size() != y.clause.literals.size()) return false;
      for (std::size_t j = 0; j < x.clause.literals.size(); ++j) {
        if (!same_literal(x.clause.literals[j], y.clause.literals[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace conprove
