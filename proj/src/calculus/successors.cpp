#include "conprove/calculus/state.hpp"

namespace conprove {

class Stepper {
 public:
  Stepper(const ProverState& s, const Matrix& m, const CalculusOptions& opts)
      : s_(s), m_(m), opts_(opts), goal_(s.current()), head_(goal_.head()) {}

  std::optional<ProverState> lemma(std::uint32_t index) const {
    std::uint32_t i = 0;
    for (const BoundLiteral& l : goal_.lemmas) {
      if (i++ != index) continue;
      if (!identical(s_.sigma_, head_, l)) return std::nullopt;
      return finish(s_.sigma_, action(Action::Kind::Lemma, index, 0), nullptr);
    }
    return std::nullopt;
  }

  // Index of the first lemma identical to the head, if any.
  std::optional<std::uint32_t> matching_lemma() const {
    std::uint32_t i = 0;
    for (const BoundLiteral& l : goal_.lemmas) {
      if (identical(s_.sigma_, head_, l)) return i;
      ++i;
    }
    return std::nullopt;
  }

  std::optional<ProverState> reduction(std::uint32_t index) const {
    std::uint32_t i = 0;
    for (const BoundLiteral& p : goal_.path) {
      if (i++ != index) continue;
      if (p.positive() == head_.positive() || p.predicate() != head_.predicate()) return std::nullopt;
      auto sigma = unify_atoms(s_.sigma_, head_, p);
      if (!sigma) return std::nullopt;
      return finish(*sigma, action(Action::Kind::Reduction, index, 0), nullptr);
    }
    return std::nullopt;
  }

  std::optional<ProverState> extension(std::uint32_t clause, std::uint32_t literal, EnumerationStats* stats) const {
    if (clause >= m_.size()) return std::nullopt;
    const Clause& c = m_.clause(clause);
    if (literal >= c.literals.size()) return std::nullopt;
    const Literal& l = c.literals[literal];
    if (l.positive == head_.positive() || l.predicate != head_.predicate()) return std::nullopt;
    const bool blocked = opts_.depth_limit && !head_.is_top() && goal_.depth >= *opts_.depth_limit;
    if (blocked && !stats) return std::nullopt;
    const std::uint32_t offset = s_.next_var_;
    auto sigma = unify_atoms(s_.sigma_, head_, BoundLiteral{&l, offset});
    if (!sigma) return std::nullopt;
    if (blocked) {
      stats->depth_limited = true;
      return std::nullopt;
    }
    Goal g;
    g.clause = &c;
    g.clause_id = clause;
    g.offset = offset;
    g.skip = static_cast<std::int32_t>(literal);
    g.path = goal_.path.push(head_);
    g.lemmas = goal_.lemmas;
    g.depth = goal_.depth + (head_.is_top() ? 0 : 1);
    g.normalize();
    return finish(*sigma, action(Action::Kind::Extension, clause, literal), &g);
  }

 private:
  Action action(Action::Kind kind, std::uint32_t a, std::uint32_t b) const {
    return Action{kind, static_cast<std::uint32_t>(s_.open_count() - 1), a, b};
  }

  std::optional<ProverState> finish(const Substitution& sigma, const Action& a, const Goal* opened) const {
    if (opts_.regularity) {
      for (const BoundLiteral& p : goal_.path) {
        if (identical(sigma, head_, p)) return std::nullopt;
      }
    }
    ProverState t = s_;
    t.sigma_ = sigma;
    t.goals_ = s_.goals_.pop();
    Goal rest = goal_.advanced();
    if (opts_.lemmas && a.kind != Action::Kind::Lemma) rest.lemmas = rest.lemmas.push(head_);
    if (!rest.empty()) t.goals_ = t.goals_.push(rest);
    switch (a.kind) {
      case Action::Kind::Reduction:
        ++t.counts_.reductions;
        break;
      case Action::Kind::Lemma:
        ++t.counts_.lemmas;
        break;
      case Action::Kind::Extension:
        ++t.counts_.extensions;
        t.next_var_ += opened->clause->num_vars;
        if (!opened->empty()) {
          t.goals_ = t.goals_.push(*opened);
          ++t.opened_total_;
        }
        break;
    }
    t.history_ = s_.history_.push(a);
    return t;
  }

  const ProverState& s_;
  const Matrix& m_;
  const CalculusOptions& opts_;
  const Goal& goal_;
  BoundLiteral head_;
};

std::vector<Successor> successors(const ProverState& s, const Matrix& m, const CalculusOptions& opts,
                                  EnumerationStats* stats) {
  std::vector<Successor> out;
  if (s.closed()) return out;
  Stepper step(s, m, opts);
  const Goal& g = s.current();
  const BoundLiteral head = g.head();

  if (opts.lemmas) {
    if (auto k = step.matching_lemma()) {
      if (auto t = step.lemma(*k)) out.push_back(Successor{*t->last_action(), std::move(*t)});
    }
  }
  for (std::uint32_t i = 0; i < g.path.size(); ++i) {
    if (auto t = step.reduction(i)) out.push_back(Successor{*t->last_action(), std::move(*t)});
  }
  for (const IndexEntry& e : m.candidates(head.predicate(), head.positive())) {
    if (stats) ++stats->extension_candidates;
    if (auto t = step.extension(e.clause, e.literal, stats)) out.push_back(Successor{*t->last_action(), std::move(*t)});
  }
  return out;
}

std::optional<ProverState> apply(const ProverState& s, const Action& action, const Matrix& m,
                                 const CalculusOptions& opts) {
  if (s.closed() || action.goal != s.open_count() - 1) return std::nullopt;
  Stepper step(s, m, opts);
  switch (action.kind) {
    case Action::Kind::Reduction:
      return step.reduction(action.a);
    case Action::Kind::Extension:
      return step.extension(action.a, action.b, nullptr);
    case Action::Kind::Lemma:
      if (!opts.lemmas) return std::nullopt;
      return step.lemma(action.a);
  }
  return std::nullopt;
}

}  // namespace conprove
