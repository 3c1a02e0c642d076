#include "conprove/calculus/state.hpp"

#include <algorithm>

namespace conprove {

std::size_t Goal::remaining() const {
  std::size_t n = 0;
  for (std::size_t i = position; i < clause->literals.size(); ++i) {
    if (static_cast<std::int32_t>(i) != skip) ++n;
  }
  return n;
}

std::vector<BoundLiteral> Goal::literals() const {
  std::vector<BoundLiteral> out;
  for (std::size_t i = position; i < clause->literals.size(); ++i) {
    if (static_cast<std::int32_t>(i) != skip) out.push_back(BoundLiteral{&clause->literals[i], offset});
  }
  return out;
}

void Goal::normalize() {
  if (static_cast<std::int32_t>(position) == skip) ++position;
}

Goal Goal::advanced() const {
  Goal g = *this;
  ++g.position;
  g.normalize();
  return g;
}

std::string to_string(const Action& action) {
  switch (action.kind) {
    case Action::Kind::Reduction:
      return "red " + std::to_string(action.goal) + " " + std::to_string(action.a);
    case Action::Kind::Extension:
      return "ext " + std::to_string(action.goal) + " " + std::to_string(action.a) + " " + std::to_string(action.b);
    case Action::Kind::Lemma:
      return "lem " + std::to_string(action.goal) + " " + std::to_string(action.a);
  }
  return {};
}

ProverState ProverState::initial(const Matrix& m) {
  ProverState s;
  Goal g;
  g.clause = &m.top_clause();
  s.goals_ = s.goals_.push(g);
  return s;
}

std::vector<Action> ProverState::actions() const {
  std::vector<Action> out(history_.begin(), history_.end());
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Action> ProverState::last_action() const {
  if (history_.empty()) return std::nullopt;
  return history_.front();
}

}  // namespace conprove
