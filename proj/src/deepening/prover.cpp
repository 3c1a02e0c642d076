#include "conprove/deepening/prover.hpp"

#include <stdexcept>

#include "conprove/util/deadline.hpp"

namespace conprove {

void validate(const DeepeningOptions& opts) {
  if (opts.start_depth < 1) throw std::invalid_argument("depth schedule start must be at least 1");
  if (opts.increment < 1) throw std::invalid_argument("depth schedule increment must be at least 1");
}

std::string to_string(SearchResult r) {
  switch (r) {
    case SearchResult::Proof:
      return "proof";
    case SearchResult::Saturated:
      return "saturated";
    case SearchResult::NoStartClause:
      return "no-start-clause";
    case SearchResult::Timeout:
      return "timeout";
    case SearchResult::BudgetSpent:
      return "budget";
  }
  return "?";
}

namespace {

struct Frame {
  ProverState state;
  std::vector<Successor> successors;
  std::size_t next = 0;
  // Open-goal count at which the head literal of this frame's goal is closed.
  std::size_t target = 0;
  // Frames still waiting for their head literal to close, below this one.
  PersistentList<std::uint32_t> pending_before;
  bool closed_once = false;
  std::optional<LiteralKey> key;
};

enum class IterationEnd { Proof, Exhausted, Timeout, Budget };

class Iteration {
 public:
  Iteration(const Matrix& m, const DeepeningOptions& opts, const std::vector<std::vector<LiteralKey>>& keys,
            const Deadline& deadline, DeepeningStats& stats, std::uint32_t bound)
      : m_(m), opts_(opts), keys_(keys), deadline_(deadline), stats_(stats) {
    calc_.regularity = opts.regularity;
    calc_.lemmas = opts.lemmas;
    calc_.depth_limit = bound;
  }

  IterationEnd run() {
    push(ProverState::initial(m_), {});
    std::uint64_t ticks = 0;
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      if (f.next >= f.successors.size()) {
        if (!f.closed_once && f.key) events_.push_back(TrainingEvent{*f.key, false});
        frames_.pop_back();
        continue;
      }
      if ((++ticks & 0xff) == 0 && deadline_.expired()) return IterationEnd::Timeout;

      const std::uint32_t index = static_cast<std::uint32_t>(frames_.size() - 1);
      const Successor& s = f.successors[f.next++];
      switch (s.action.kind) {
        case Action::Kind::Extension:
          ++stats_.extensions;
          break;
        case Action::Kind::Reduction:
          ++stats_.reductions;
          break;
        case Action::Kind::Lemma:
          ++stats_.lemmas;
          break;
      }
      pending_ = f.pending_before.push(index);
      ProverState t = s.state;
      close_finished(t.open_count());
      if (t.closed()) {
        proof_ = std::move(t);
        return IterationEnd::Proof;
      }
      if (opts_.inference_budget && stats_.extensions >= *opts_.inference_budget) return IterationEnd::Budget;
      push(std::move(t), pending_);
    }
    return IterationEnd::Exhausted;
  }

  bool depth_limited() const { return enum_.depth_limited; }
  const ProverState& proof() const { return *proof_; }
  std::vector<TrainingEvent> take_events() { return std::move(events_); }

 private:
  void push(ProverState s, PersistentList<std::uint32_t> pending) {
    Frame f;
    const Goal& g = s.current();
    f.successors = successors(s, m_, calc_, &enum_);
    f.target = s.open_count() - 1 + (g.remaining() > 1 ? 1 : 0);
    f.pending_before = std::move(pending);
    if (g.clause_id != kStartClause && !g.head().is_top()) f.key = keys_[g.clause_id][g.position];
    if (g.depth > stats_.max_depth_reached) stats_.max_depth_reached = g.depth;
    f.state = std::move(s);
    frames_.push_back(std::move(f));
  }

  // Marks every pending frame whose head literal is closed at this open-goal
  // count, applying the cut if enabled.
  void close_finished(std::size_t open) {
    while (!pending_.empty() && open <= frames_[pending_.front()].target) {
      const std::uint32_t i = pending_.front();
      pending_ = pending_.pop();
      Frame& f = frames_[i];
      if (!f.closed_once) {
        f.closed_once = true;
        if (f.key) events_.push_back(TrainingEvent{*f.key, true});
      }
      if (opts_.cut) {
        for (std::size_t j = i; j < frames_.size(); ++j) frames_[j].next = frames_[j].successors.size();
      }
    }
  }

  const Matrix& m_;
  const DeepeningOptions& opts_;
  const std::vector<std::vector<LiteralKey>>& keys_;
  const Deadline& deadline_;
  DeepeningStats& stats_;
  CalculusOptions calc_;
  EnumerationStats enum_;
  std::vector<Frame> frames_;
  PersistentList<std::uint32_t> pending_;
  std::optional<ProverState> proof_;
  std::vector<TrainingEvent> events_;
};

}  // namespace

SearchOutcome prove_iterative(const Matrix& m, const DeepeningOptions& opts) {
  validate(opts);
  SearchOutcome out;
  if (!m.has_positive_clause()) {
    out.result = SearchResult::NoStartClause;
    out.exhaustive = true;
    return out;
  }
  if (!m.prepared()) throw std::invalid_argument("matrix must be prepared");
  const Matrix& pm = m;

  const auto keys = literal_keys(pm);

  const Deadline deadline(opts.time_budget);
  std::uint32_t bound = opts.start_depth;
  if (opts.max_depth && bound > *opts.max_depth) bound = *opts.max_depth;
  while (true) {
    out.depth = bound;
    ++out.stats.iterations;
    Iteration it(pm, opts, keys, deadline, out.stats, bound);
    switch (it.run()) {
      case IterationEnd::Proof:
        out.result = SearchResult::Proof;
        out.certificate = make_certificate(pm, it.proof());
        out.proof_counts = it.proof().counts();
        if (opts.collect_training) out.events = it.take_events();
        return out;
      case IterationEnd::Timeout:
        out.result = SearchResult::Timeout;
        return out;
      case IterationEnd::Budget:
        out.result = SearchResult::BudgetSpent;
        return out;
      case IterationEnd::Exhausted:
        break;
    }
    if (!it.depth_limited()) {
      out.result = SearchResult::Saturated;
      out.exhaustive = !opts.cut;
      return out;
    }
    if (opts.max_depth && bound >= *opts.max_depth) {
      out.result = SearchResult::Saturated;
      out.exhaustive = false;
      return out;
    }
    bound += opts.increment;
    if (opts.max_depth && bound > *opts.max_depth) bound = *opts.max_depth;
    if (deadline.expired()) {
      out.result = SearchResult::Timeout;
      return out;
    }
  }
}

}  // namespace conprove
