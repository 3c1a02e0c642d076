#include "conprove/syntax/term.hpp"

#include <algorithm>

namespace conprove {

Term Term::variable(VarIndex index) {
  auto node = std::make_shared<TermNode>();
  node->is_var = true;
  node->id = index;
  return Term(std::move(node));
}

Term Term::apply(SymbolId functor, std::vector<Term> args) {
  auto node = std::make_shared<TermNode>();
  node->id = functor;
  node->args = std::move(args);
  return Term(std::move(node));
}

VarIndex Term::var_bound() const {
  if (is_var()) return var() + 1;
  VarIndex bound = 0;
  for (const auto& a : args()) bound = std::max(bound, a.var_bound());
  return bound;
}

bool terms_equal(const TermNode* a, const TermNode* b) {
  if (a == b) return true;
  if (a->is_var != b->is_var || a->id != b->id || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!terms_equal(a->args[i].node(), b->args[i].node())) return false;
  }
  return true;
}

bool operator==(const Term& a, const Term& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  return terms_equal(a.node(), b.node());
}

}  // namespace conprove
