#include <unordered_map>

#include "conprove/calculus/certificate.hpp"

namespace conprove {

namespace {

struct Rejection {
  std::size_t step;
  std::string reason;
};

// Branching-calculus replay over explicitly renamed literal copies and a
// single mutable substitution.
class Replay {
 public:
  Replay(const Matrix& m, const std::vector<Action>& actions) : m_(m), actions_(actions) {}

  std::uint64_t extensions() const { return extensions_; }

  void run() {
    std::vector<Literal> start{top_literal(true)};
    close(start, {}, {}, 0);
    if (cursor_ != actions_.size()) throw Rejection{cursor_, "actions left after the proof closed"};
  }

 private:
  // Closes every literal of `clause` in order. `below` is the number of open
  // goals underneath this one.
  void close(const std::vector<Literal>& clause, const std::vector<Literal>& path, std::vector<Literal> lemmas,
             std::size_t below) {
    for (std::size_t i = 0; i < clause.size(); ++i) {
      const Literal& lit = clause[i];
      const bool more = i + 1 < clause.size();
      if (cursor_ >= actions_.size()) throw Rejection{cursor_, "proof ends with open goals"};
      const std::size_t step = cursor_++;
      const Action& a = actions_[step];
      if (a.goal != below) throw Rejection{step, "goal index does not match the open goal"};
      switch (a.kind) {
        case Action::Kind::Reduction: {
          if (a.a >= path.size()) throw Rejection{step, "path index out of range"};
          const Literal& p = path[path.size() - 1 - a.a];
          if (p.positive == lit.positive || p.predicate != lit.predicate) {
            throw Rejection{step, "reduction literals are not complementary"};
          }
          if (!unify_args(lit, p)) throw Rejection{step, "reduction literals do not unify"};
          break;
        }
        case Action::Kind::Lemma: {
          if (a.a >= lemmas.size()) throw Rejection{step, "lemma index out of range"};
          if (!(substitute(lit) == substitute(lemmas[lemmas.size() - 1 - a.a]))) {
            throw Rejection{step, "lemma does not match the goal literal"};
          }
          break;
        }
        case Action::Kind::Extension: {
          if (a.a >= m_.size()) throw Rejection{step, "clause index out of range"};
          const Clause& c = m_.clause(a.a);
          if (a.b >= c.literals.size()) throw Rejection{step, "literal index out of range"};
          if (step == 0) {
            if (!c.is_positive()) throw Rejection{step, "start clause is not positive"};
            if (!c.literals[a.b].is_top()) throw Rejection{step, "start must connect the top marker"};
          }
          std::vector<Literal> copy = rename(c);
          const Literal connected = copy[a.b];
          copy.erase(copy.begin() + a.b);
          if (connected.positive == lit.positive || connected.predicate != lit.predicate) {
            throw Rejection{step, "extension literals are not complementary"};
          }
          if (!unify_args(lit, connected)) throw Rejection{step, "extension literals do not unify"};
          ++extensions_;
          std::vector<Literal> deeper = path;
          deeper.push_back(lit);
          close(copy, deeper, lemmas, below + (more ? 1 : 0));
          break;
        }
      }
      if (a.kind != Action::Kind::Lemma) lemmas.push_back(lit);
    }
  }

  std::vector<Literal> rename(const Clause& c) {
    const std::uint32_t base = next_var_;
    next_var_ += c.num_vars;
    std::vector<Literal> out;
    for (const Literal& l : c.literals) {
      Literal r{l.positive, l.predicate, {}};
      for (const Term& t : l.args) r.args.push_back(rename(t, base));
      out.push_back(std::move(r));
    }
    return out;
  }

  static Term rename(const Term& t, std::uint32_t base) {
    if (t.is_var()) return Term::variable(base + t.var());
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(rename(a, base));
    return Term::apply(t.functor(), std::move(args));
  }

  Term walk(Term t) const {
    while (t.is_var()) {
      auto it = sigma_.find(t.var());
      if (it == sigma_.end()) break;
      t = it->second;
    }
    return t;
  }

  Term substitute(const Term& t) const {
    Term w = walk(t);
    if (w.is_var()) return w;
    std::vector<Term> args;
    for (const Term& a : w.args()) args.push_back(substitute(a));
    return Term::apply(w.functor(), std::move(args));
  }

  Literal substitute(const Literal& l) const {
    Literal out{l.positive, l.predicate, {}};
    for (const Term& t : l.args) out.args.push_back(substitute(t));
    return out;
  }

  bool occurs(VarIndex v, const Term& t) const {
    Term w = walk(t);
    if (w.is_var()) return w.var() == v;
    for (const Term& a : w.args()) {
      if (occurs(v, a)) return true;
    }
    return false;
  }

  bool unify(const Term& s, const Term& t) {
    Term a = walk(s);
    Term b = walk(t);
    if (a.is_var() && b.is_var() && a.var() == b.var()) return true;
    if (a.is_var()) {
      if (occurs(a.var(), b)) return false;
      sigma_.emplace(a.var(), b);
      return true;
    }
    if (b.is_var()) return unify(b, a);
    if (a.functor() != b.functor() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      if (!unify(a.args()[i], b.args()[i])) return false;
    }
    return true;
  }

  bool unify_args(const Literal& x, const Literal& y) {
    if (x.args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x.args.size(); ++i) {
      if (!unify(x.args[i], y.args[i])) return false;
    }
    return true;
  }

  const Matrix& m_;
  const std::vector<Action>& actions_;
  std::size_t cursor_ = 0;
  std::uint32_t next_var_ = 0;
  std::uint64_t extensions_ = 0;
  std::unordered_map<VarIndex, Term> sigma_;
};

}  // namespace

CheckResult check_proof(const Matrix& m, const ProofCertificate& cert) {
  CheckResult r;
  if (cert.matrix_digest != m.digest()) {
    r.reason = "matrix digest mismatch";
    return r;
  }
  Replay replay(m, cert.actions);
  try {
    replay.run();
  } catch (const Rejection& e) {
    r.failed_step = e.step;
    r.reason = e.reason;
    r.extensions = replay.extensions();
    return r;
  }
  r.accepted = true;
  r.failed_step = cert.actions.size();
  r.extensions = replay.extensions();
  return r;
}

}  // namespace conprove
