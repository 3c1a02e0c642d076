#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conprove/calculus/persistent_list.hpp"
#include "conprove/calculus/substitution.hpp"
#include "conprove/calculus/unify.hpp"
#include "conprove/syntax/matrix.hpp"

namespace conprove {

inline constexpr std::uint32_t kStartClause = UINT32_MAX;

// An open subgoal: the literals of a renamed clause copy from `position` on,
// minus the literal used to connect it, together with its branch context.
struct Goal {
  const Clause* clause = nullptr;
  std::uint32_t clause_id = kStartClause;
  std::uint32_t offset = 0;
  // Literal index excluded from the goal (the connected literal), or -1.
  std::int32_t skip = -1;
  std::uint32_t position = 0;
  // Most recent path literal first.
  PersistentList<BoundLiteral> path;
  PersistentList<BoundLiteral> lemmas;
  // Number of path literals other than top.
  std::uint32_t depth = 0;

  bool empty() const { return position >= clause->literals.size(); }
  BoundLiteral head() const { return BoundLiteral{&clause->literals[position], offset}; }
  std::size_t remaining() const;
  std::vector<BoundLiteral> literals() const;

  // The goal without its head literal.
  Goal advanced() const;
  // Moves position past the skipped literal if needed.
  void normalize();
};

struct Action {
  enum class Kind : std::uint8_t { Reduction, Extension, Lemma };
  Kind kind = Kind::Extension;
  // Index of the acted-on goal counted from the oldest open goal.
  std::uint32_t goal = 0;
  // Reduction: path index (0 = most recent). Extension: clause index.
  // Lemma: lemma index (0 = most recent).
  std::uint32_t a = 0;
  // Extension: literal index within the clause.
  std::uint32_t b = 0;

  friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(const Action& action);

struct InferenceCounts {
  std::uint64_t extensions = 0;
  std::uint64_t reductions = 0;
  std::uint64_t lemmas = 0;

  friend bool operator==(const InferenceCounts&, const InferenceCounts&) = default;
};

struct CalculusOptions {
  bool regularity = true;
  bool lemmas = true;
  // Extensions from goals whose depth has reached the limit are not
  // generated. Goals with the top head are exempt.
  std::optional<std::uint32_t> depth_limit;
};

// Goals plus substitution; an immutable value. Goals are kept as a stack with
// the most recently created goal on top.
class ProverState {
 public:
  static ProverState initial(const Matrix& m);

  bool closed() const { return goals_.empty(); }
  const Goal& current() const { return goals_.front(); }
  const PersistentList<Goal>& goals() const { return goals_; }
  std::size_t open_count() const { return goals_.size(); }
  std::uint64_t opened_total() const { return opened_total_; }
  const Substitution& sigma() const { return sigma_; }
  std::uint32_t next_var() const { return next_var_; }
  const InferenceCounts& counts() const { return counts_; }

  // Actions from the initial state to this one, oldest first.
  std::vector<Action> actions() const;
  std::size_t action_count() const { return history_.size(); }
  std::optional<Action> last_action() const;

  friend class Stepper;

 private:
  PersistentList<Goal> goals_;
  Substitution sigma_;
  std::uint64_t opened_total_ = 1;
  std::uint32_t next_var_ = 0;
  InferenceCounts counts_;
  PersistentList<Action> history_;
};

struct Successor {
  Action action;
  ProverState state;
};

struct EnumerationStats {
  // An extension unified but was withheld by the depth limit.
  bool depth_limited = false;
  std::uint64_t extension_candidates = 0;
};

// All successor states of a non-closed state, in the order lemma step,
// reductions (path order), extensions (matrix order).
std::vector<Successor> successors(const ProverState& s, const Matrix& m, const CalculusOptions& opts = {},
                                  EnumerationStats* stats = nullptr);

// Applies one action; nullopt if it is not applicable (wrong goal index,
// failed unification, regularity or depth violation).
std::optional<ProverState> apply(const ProverState& s, const Action& action, const Matrix& m,
                                 const CalculusOptions& opts = {});

}  // namespace conprove
