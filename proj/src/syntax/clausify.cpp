#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "conprove/syntax/matrix.hpp"

namespace conprove {

namespace {

struct Nnf {
  enum class Kind { Lit, And, Or, Forall, Exists, True, False };
  Kind kind = Kind::True;
  Literal lit;
  std::vector<Nnf> kids;
  std::vector<VarIndex> vars;
};

Nnf constant(bool v) {
  Nnf n;
  n.kind = v ? Nnf::Kind::True : Nnf::Kind::False;
  return n;
}

Nnf junction(Nnf::Kind kind, Nnf a, Nnf b) {
  const bool is_and = kind == Nnf::Kind::And;
  const auto absorbing = is_and ? Nnf::Kind::False : Nnf::Kind::True;
  const auto neutral = is_and ? Nnf::Kind::True : Nnf::Kind::False;
  if (a.kind == absorbing || b.kind == absorbing) return constant(!is_and);
  if (a.kind == neutral) return b;
  if (b.kind == neutral) return a;
  Nnf n;
  n.kind = kind;
  n.kids.push_back(std::move(a));
  n.kids.push_back(std::move(b));
  return n;
}

Nnf to_nnf(const Formula& f, bool positive) {
  switch (f.kind) {
    case FormulaKind::True:
      return constant(positive);
    case FormulaKind::False:
      return constant(!positive);
    case FormulaKind::Atom: {
      Nnf n;
      n.kind = Nnf::Kind::Lit;
      n.lit = f.atom;
      n.lit.positive = positive;
      return n;
    }
    case FormulaKind::Not:
      return to_nnf(*f.children[0], !positive);
    case FormulaKind::And:
      return junction(positive ? Nnf::Kind::And : Nnf::Kind::Or, to_nnf(*f.children[0], positive),
                      to_nnf(*f.children[1], positive));
    case FormulaKind::Or:
      return junction(positive ? Nnf::Kind::Or : Nnf::Kind::And, to_nnf(*f.children[0], positive),
                      to_nnf(*f.children[1], positive));
    case FormulaKind::Implies:
      return junction(positive ? Nnf::Kind::Or : Nnf::Kind::And, to_nnf(*f.children[0], !positive),
                      to_nnf(*f.children[1], positive));
    case FormulaKind::Iff: {
      const auto& a = *f.children[0];
      const auto& b = *f.children[1];
      if (positive) {
        return junction(Nnf::Kind::And, junction(Nnf::Kind::Or, to_nnf(a, false), to_nnf(b, true)),
                        junction(Nnf::Kind::Or, to_nnf(a, true), to_nnf(b, false)));
      }
      return junction(Nnf::Kind::And, junction(Nnf::Kind::Or, to_nnf(a, true), to_nnf(b, true)),
                      junction(Nnf::Kind::Or, to_nnf(a, false), to_nnf(b, false)));
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      Nnf body = to_nnf(*f.children[0], positive);
      if (body.kind == Nnf::Kind::True || body.kind == Nnf::Kind::False) return body;
      Nnf n;
      n.kind = (f.kind == FormulaKind::Forall) == positive ? Nnf::Kind::Forall : Nnf::Kind::Exists;
      n.vars = f.bound;
      n.kids.push_back(std::move(body));
      return n;
    }
  }
  return constant(true);
}

// Canonical text of a subformula: bound variables become binder-relative
// indices, free variables are numbered by first occurrence.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Signature& sig) : sig_(sig) {}

  std::string run(const Nnf& n) {
    out_.clear();
    binders_.clear();
    free_.clear();
    emit(n);
    return out_;
  }

  const std::vector<VarIndex>& free_order() const { return free_; }

 private:
  void emit_term(const Term& t) {
    if (t.is_var()) {
      for (std::size_t k = binders_.size(); k-- > 0;) {
        if (binders_[k] == t.var()) {
          out_ += "#" + std::to_string(binders_.size() - 1 - k);
          return;
        }
      }
      auto it = std::find(free_.begin(), free_.end(), t.var());
      if (it == free_.end()) {
        free_.push_back(t.var());
        it = free_.end() - 1;
      }
      out_ += "@" + std::to_string(it - free_.begin());
      return;
    }
    out_ += sig_.name(t.functor());
    out_ += "/" + std::to_string(t.args().size());
    if (!t.args().empty()) {
      out_ += "(";
      for (const auto& a : t.args()) {
        emit_term(a);
        out_ += ",";
      }
      out_ += ")";
    }
  }

  void emit(const Nnf& n) {
    switch (n.kind) {
      case Nnf::Kind::True:
        out_ += "T";
        return;
      case Nnf::Kind::False:
        out_ += "F";
        return;
      case Nnf::Kind::Lit:
        out_ += n.lit.positive ? "+" : "-";
        out_ += sig_.name(n.lit.predicate);
        out_ += "/" + std::to_string(n.lit.args.size()) + "(";
        for (const auto& a : n.lit.args) {
          emit_term(a);
          out_ += ",";
        }
        out_ += ")";
        return;
      case Nnf::Kind::And:
      case Nnf::Kind::Or:
        out_ += n.kind == Nnf::Kind::And ? "&(" : "|(";
        emit(n.kids[0]);
        out_ += ";";
        emit(n.kids[1]);
        out_ += ")";
        return;
      case Nnf::Kind::Forall:
      case Nnf::Kind::Exists:
        out_ += n.kind == Nnf::Kind::Forall ? "A" : "E";
        out_ += std::to_string(n.vars.size()) + ".";
        for (auto v : n.vars) binders_.push_back(v);
        emit(n.kids[0]);
        binders_.resize(binders_.size() - n.vars.size());
        return;
    }
  }

  const Signature& sig_;
  std::string out_;
  std::vector<VarIndex> binders_;
  std::vector<VarIndex> free_;
};

Term substitute(const Term& t, const std::map<VarIndex, Term>& s) {
  if (t.is_var()) {
    auto it = s.find(t.var());
    return it == s.end() ? t : it->second;
  }
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(substitute(a, s));
  return Term::apply(t.functor(), std::move(args));
}

Nnf substitute(const Nnf& n, const std::map<VarIndex, Term>& s) {
  if (s.empty()) return n;
  Nnf out = n;
  if (n.kind == Nnf::Kind::Lit) {
    for (auto& a : out.lit.args) a = substitute(a, s);
    return out;
  }
  for (auto& k : out.kids) k = substitute(k, s);
  return out;
}

class Skolemizer {
 public:
  Skolemizer(Signature& sig, std::set<std::string> reserved)
      : sig_(sig), canon_(sig), reserved_(std::move(reserved)) {}

  Nnf run(const Nnf& n) {
    switch (n.kind) {
      case Nnf::Kind::Lit:
      case Nnf::Kind::True:
      case Nnf::Kind::False:
        return n;
      case Nnf::Kind::And:
      case Nnf::Kind::Or: {
        Nnf out;
        out.kind = n.kind;
        out.kids = {run(n.kids[0]), run(n.kids[1])};
        return out;
      }
      case Nnf::Kind::Forall: {
        Nnf out = n;
        out.kids[0] = run(n.kids[0]);
        return out;
      }
      case Nnf::Kind::Exists: {
        const std::string canonical = canon_.run(n);
        std::vector<Term> args;
        for (auto v : canon_.free_order()) args.push_back(Term::variable(v));
        std::map<VarIndex, Term> s;
        for (std::size_t k = 0; k < n.vars.size(); ++k) {
          s[n.vars[k]] = Term::apply(symbol_for(canonical, k, args.size()), args);
        }
        return run(substitute(n.kids[0], s));
      }
    }
    return n;
  }

 private:
  SymbolId symbol_for(const std::string& canonical, std::size_t k, std::size_t arity) {
    const std::string key = canonical + "\x1f" + std::to_string(k);
    if (auto it = assigned_.find(key); it != assigned_.end()) return it->second;
    std::string name = skolem_name(canonical, k);
    if (taken(name)) name += "_" + std::to_string(arity);
    for (int n = 1; taken(name); ++n) name = skolem_name(canonical, k) + "_" + std::to_string(arity) + "_" + std::to_string(n);
    used_.insert(name);
    const auto id = sig_.intern(name);
    assigned_.emplace(key, id);
    return id;
  }

  bool taken(const std::string& name) const { return used_.count(name) || reserved_.count(name); }

  Signature& sig_;
  Canonicalizer canon_;
  std::set<std::string> reserved_;
  std::set<std::string> used_;
  std::unordered_map<std::string, SymbolId> assigned_;
};

using RawClause = std::vector<Literal>;

void distribute(const Nnf& n, std::vector<RawClause>& out, std::size_t limit, std::size_t& budget_used) {
  switch (n.kind) {
    case Nnf::Kind::True:
      return;
    case Nnf::Kind::False:
      out.emplace_back();
      return;
    case Nnf::Kind::Lit:
      out.push_back({n.lit});
      ++budget_used;
      break;
    case Nnf::Kind::Forall:
      distribute(n.kids[0], out, limit, budget_used);
      return;
    case Nnf::Kind::Exists:
      throw ClausifyError("existential quantifier left after skolemization");
    case Nnf::Kind::And:
      distribute(n.kids[0], out, limit, budget_used);
      distribute(n.kids[1], out, limit, budget_used);
      return;
    case Nnf::Kind::Or: {
      std::vector<RawClause> left, right;
      distribute(n.kids[0], left, limit, budget_used);
      distribute(n.kids[1], right, limit, budget_used);
      for (const auto& a : left) {
        for (const auto& b : right) {
          RawClause c = a;
          c.insert(c.end(), b.begin(), b.end());
          budget_used += c.size();
          if (budget_used > limit) {
            throw ClausifyError("clause normal form exceeds " + std::to_string(limit) + " literals");
          }
          out.push_back(std::move(c));
        }
      }
      return;
    }
  }
  if (budget_used > limit) throw ClausifyError("clause normal form exceeds " + std::to_string(limit) + " literals");
}

Term renumber(const Term& t, std::map<VarIndex, VarIndex>& map) {
  if (t.is_var()) {
    auto [it, inserted] = map.emplace(t.var(), static_cast<VarIndex>(map.size()));
    return Term::variable(it->second);
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(renumber(a, map));
  return Term::apply(t.functor(), std::move(args));
}

Clause make_clause(RawClause lits, std::size_t origin, std::string name, const std::vector<std::string>& names) {
  Clause c;
  c.origin = origin;
  c.name = std::move(name);
  std::map<VarIndex, VarIndex> map;
  for (auto& l : lits) {
    for (auto& a : l.args) a = renumber(a, map);
  }
  c.literals = std::move(lits);
  c.num_vars = static_cast<VarIndex>(map.size());
  c.var_names.resize(c.num_vars);
  std::set<std::string> seen;
  for (auto [orig, fresh] : map) {
    std::string n = orig < names.size() ? names[orig] : "X";
    std::string candidate = n;
    for (int k = 1; seen.count(candidate); ++k) candidate = n + "_" + std::to_string(k);
    seen.insert(candidate);
    c.var_names[fresh] = candidate;
  }
  return c;
}

void collect_arities(const Term& t, std::map<SymbolId, std::size_t>& functions) {
  if (t.is_var()) return;
  functions[t.functor()] = t.args().size();
  for (const auto& a : t.args()) collect_arities(a, functions);
}

void append_equality_axioms(Signature& sig, std::vector<Clause>& clauses, std::size_t origin) {
  const SymbolId eq = sig.intern("=");
  std::map<SymbolId, std::size_t> functions, predicates;
  bool uses_equality = false;
  for (const auto& c : clauses) {
    for (const auto& l : c.literals) {
      if (l.predicate == eq) uses_equality = true;
      else if (!l.is_top()) predicates[l.predicate] = l.args.size();
      for (const auto& a : l.args) collect_arities(a, functions);
    }
  }
  if (!uses_equality) return;
  const Term x = Term::variable(0), y = Term::variable(1), z = Term::variable(2);
  auto add = [&](std::string name, RawClause lits) {
    VarIndex n = 0;
    for (const auto& l : lits) {
      for (const auto& a : l.args) n = std::max(n, a.var_bound());
    }
    Clause c;
    c.literals = std::move(lits);
    c.origin = origin;
    c.name = std::move(name);
    c.num_vars = n;
    for (VarIndex v = 0; v < n; ++v) c.var_names.push_back("X" + std::to_string(v));
    clauses.push_back(std::move(c));
  };
  add("eq_reflexivity", {Literal{true, eq, {x, x}}});
  add("eq_symmetry", {Literal{false, eq, {x, y}}, Literal{true, eq, {y, x}}});
  add("eq_transitivity", {Literal{false, eq, {x, y}}, Literal{false, eq, {y, z}}, Literal{true, eq, {x, z}}});
  auto args_with = [](std::size_t arity, std::size_t pos, const Term& at) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(i == pos ? at : Term::variable(static_cast<VarIndex>(i + 2)));
    return args;
  };
  for (auto [f, arity] : functions) {
    for (std::size_t i = 0; i < arity; ++i) {
      add("eq_congruence_" + sig.name(f) + "_" + std::to_string(i + 1),
          {Literal{false, eq, {x, y}},
           Literal{true, eq, {Term::apply(f, args_with(arity, i, x)), Term::apply(f, args_with(arity, i, y))}}});
    }
  }
  for (auto [p, arity] : predicates) {
    for (std::size_t i = 0; i < arity; ++i) {
      add("eq_substitution_" + sig.name(p) + "_" + std::to_string(i + 1),
          {Literal{false, eq, {x, y}}, Literal{false, p, args_with(arity, i, x)},
           Literal{true, p, args_with(arity, i, y)}});
    }
  }
}

}  // namespace

std::string skolem_name(std::string_view canonical, std::size_t index) {
  std::string key(canonical);
  key += "\x1f" + std::to_string(index);
  return "sk_" + hex16(fnv1a64(key));
}

// Merges repeated literals; false for tautologies.
bool tidy(RawClause& lits) {
  RawClause out;
  for (auto& l : lits) {
    if (std::find(out.begin(), out.end(), l) != out.end()) continue;
    if (std::find(out.begin(), out.end(), l.complement()) != out.end()) return false;
    out.push_back(std::move(l));
  }
  lits = std::move(out);
  return true;
}

Matrix clausify(const Problem& problem, const ClausifyOptions& options) {
  Signature sig = problem.signature;
  std::set<std::string> reserved;
  for (std::size_t i = 0; i < sig.size(); ++i) reserved.insert(sig.name(static_cast<SymbolId>(i)));
  Skolemizer skolemizer(sig, reserved);

  std::vector<Clause> clauses;
  auto emit = [&](const Formula& f, std::size_t origin, const std::string& name,
                  const std::vector<std::string>& var_names) {
    Nnf nnf = skolemizer.run(to_nnf(f, true));
    std::vector<RawClause> raw;
    std::size_t used = 0;
    distribute(nnf, raw, options.max_literals, used);
    std::erase_if(raw, [](RawClause& c) { return !tidy(c); });
    for (std::size_t k = 0; k < raw.size(); ++k) {
      std::string cname = raw.size() == 1 ? name : name + "_" + std::to_string(k + 1);
      clauses.push_back(make_clause(std::move(raw[k]), origin, std::move(cname), var_names));
    }
  };

  const Declaration* goal = nullptr;
  for (std::size_t i = 0; i < problem.declarations.size(); ++i) {
    const auto& d = problem.declarations[i];
    if (d.language == Language::Cnf) {
      Clause c = d.clause;
      c.origin = i;
      clauses.push_back(std::move(c));
    } else if (d.is_conjecture()) {
      if (goal) throw ClausifyError("multiple fof conjectures are not supported (" + goal->name + ", " + d.name + ")");
      goal = &d;
      emit(*Formula::make_not(d.formula), i, d.name, d.var_names);
    } else {
      emit(*d.formula, i, d.name, d.var_names);
    }
  }
  if (options.equality_axioms) append_equality_axioms(sig, clauses, problem.declarations.size());
  return Matrix(std::move(sig), std::move(clauses));
}

}  // namespace conprove
