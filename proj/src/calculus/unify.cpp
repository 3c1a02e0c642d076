#include "conprove/calculus/unify.hpp"

#include <utility>
#include <vector>

namespace conprove {

BoundTerm resolve(const Substitution& sigma, BoundTerm t) {
  while (t.is_var()) {
    const BoundTerm* b = sigma.find(t.var_id());
    if (!b) break;
    t = *b;
  }
  return t;
}

bool occurs(const Substitution& sigma, VarId v, BoundTerm t) {
  std::vector<BoundTerm> todo{t};
  while (!todo.empty()) {
    BoundTerm x = resolve(sigma, todo.back());
    todo.pop_back();
    if (x.is_var()) {
      if (x.var_id() == v) return true;
      continue;
    }
    for (const Term& a : x.term->args) todo.push_back(BoundTerm{a.node(), x.offset});
  }
  return false;
}

namespace {

bool unify_into(Substitution& s, std::vector<std::pair<BoundTerm, BoundTerm>>& todo) {
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    x = resolve(s, x);
    y = resolve(s, y);
    if (x.is_var() && y.is_var() && x.var_id() == y.var_id()) continue;
    if (x.is_var()) {
      if (occurs(s, x.var_id(), y)) return false;
      s = s.bind(x.var_id(), y);
      continue;
    }
    if (y.is_var()) {
      if (occurs(s, y.var_id(), x)) return false;
      s = s.bind(y.var_id(), x);
      continue;
    }
    if (x.term == y.term && x.offset == y.offset) continue;
    if (x.term->id != y.term->id || x.term->args.size() != y.term->args.size()) return false;
    for (std::size_t i = x.term->args.size(); i-- > 0;) {
      todo.emplace_back(BoundTerm{x.term->args[i].node(), x.offset}, BoundTerm{y.term->args[i].node(), y.offset});
    }
  }
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Substitution& sigma, BoundTerm s, BoundTerm t) {
  Substitution out = sigma;
  std::vector<std::pair<BoundTerm, BoundTerm>> todo{{s, t}};
  if (!unify_into(out, todo)) return std::nullopt;
  return out;
}

std::optional<Substitution> unify_atoms(const Substitution& sigma, BoundLiteral a, BoundLiteral b) {
  const auto& xs = a.literal->args;
  const auto& ys = b.literal->args;
  if (a.predicate() != b.predicate() || xs.size() != ys.size()) return std::nullopt;
  Substitution out = sigma;
  std::vector<std::pair<BoundTerm, BoundTerm>> todo;
  for (std::size_t i = xs.size(); i-- > 0;) {
    todo.emplace_back(BoundTerm{xs[i].node(), a.offset}, BoundTerm{ys[i].node(), b.offset});
  }
  if (!unify_into(out, todo)) return std::nullopt;
  return out;
}

bool identical(const Substitution& sigma, BoundTerm s, BoundTerm t) {
  std::vector<std::pair<BoundTerm, BoundTerm>> todo{{s, t}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    x = resolve(sigma, x);
    y = resolve(sigma, y);
    if (x.is_var() || y.is_var()) {
      if (!(x.is_var() && y.is_var() && x.var_id() == y.var_id())) return false;
      continue;
    }
    if (x.term == y.term && x.offset == y.offset) continue;
    if (x.term->id != y.term->id || x.term->args.size() != y.term->args.size()) return false;
    for (std::size_t i = 0; i < x.term->args.size(); ++i) {
      todo.emplace_back(BoundTerm{x.term->args[i].node(), x.offset}, BoundTerm{y.term->args[i].node(), y.offset});
    }
  }
  return true;
}

bool identical(const Substitution& sigma, BoundLiteral a, BoundLiteral b) {
  if (a.positive() != b.positive() || a.predicate() != b.predicate()) return false;
  const auto& xs = a.literal->args;
  const auto& ys = b.literal->args;
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!identical(sigma, BoundTerm{xs[i].node(), a.offset}, BoundTerm{ys[i].node(), b.offset})) return false;
  }
  return true;
}

Term instantiate(const Substitution& sigma, BoundTerm t) {
  t = resolve(sigma, t);
  if (t.is_var()) return Term::variable(t.var_id());
  std::vector<Term> args;
  args.reserve(t.term->args.size());
  for (const Term& a : t.term->args) args.push_back(instantiate(sigma, BoundTerm{a.node(), t.offset}));
  return Term::apply(t.term->id, std::move(args));
}

Literal instantiate(const Substitution& sigma, BoundLiteral l) {
  Literal out{l.positive(), l.predicate(), {}};
  for (const Term& a : l.literal->args) out.args.push_back(instantiate(sigma, BoundTerm{a.node(), l.offset}));
  return out;
}

}  // namespace conprove
