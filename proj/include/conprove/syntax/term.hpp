#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "conprove/syntax/signature.hpp"

namespace conprove {

using VarIndex = std::uint32_t;

class Term;

struct TermNode {
  bool is_var = false;
  // Variable index for variables, functor symbol for applications.
  std::uint32_t id = 0;
  std::vector<Term> args;
};

// Immutable first-order term with shared structure. Variables carry a
// clause-local index; constants are zero-arity applications.
class Term {
 public:
  Term() = default;

  static Term variable(VarIndex index);
  static Term apply(SymbolId functor, std::vector<Term> args = {});

  bool valid() const { return node_ != nullptr; }
  bool is_var() const { return node_->is_var; }
  VarIndex var() const { return node_->id; }
  SymbolId functor() const { return node_->id; }
  std::span<const Term> args() const { return node_->args; }
  const TermNode* node() const { return node_.get(); }

  // Largest variable index occurring plus one (0 for ground terms).
  VarIndex var_bound() const;
  bool ground() const { return var_bound() == 0; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

bool terms_equal(const TermNode* a, const TermNode* b);

}  // namespace conprove
