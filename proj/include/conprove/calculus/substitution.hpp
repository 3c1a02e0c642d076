#pragma once

#include <cstdint>
#include <memory>

#include "conprove/syntax/term.hpp"

namespace conprove {

// Global variable id: clause-local index plus the offset of the clause copy.
using VarId = std::uint32_t;

// A matrix term viewed through a renaming offset. Term nodes are owned by
// the matrix; a BoundTerm must not outlive it.
struct BoundTerm {
  const TermNode* term = nullptr;
  std::uint32_t offset = 0;

  bool is_var() const { return term->is_var; }
  VarId var_id() const { return offset + term->id; }
};

// Persistent map from variable ids to bound terms, stored as a 16-way radix
// trie. bind() copies one root-to-leaf path and shares everything else, so
// every earlier version stays valid and unchanged.
class Substitution {
 public:
  Substitution() = default;

  const BoundTerm* find(VarId v) const;
  Substitution bind(VarId v, BoundTerm t) const;

  // Number of bindings; grows by one per bind and serves as a generation count.
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  template <class F>
  void for_each(F&& f) const {
    if (root_) visit(root_.get(), levels_, 0, f);
  }

 private:
  static constexpr unsigned kBits = 4;
  static constexpr unsigned kWidth = 1u << kBits;

  struct Leaf;
  struct Branch;

  std::uint64_t capacity() const { return std::uint64_t{1} << (kBits * (levels_ + 1)); }

  template <class F>
  static void visit(const void* node, unsigned level, std::uint64_t base, F& f);

  std::shared_ptr<const void> root_;
  unsigned levels_ = 0;
  std::size_t size_ = 0;
};

struct Substitution::Leaf {
  BoundTerm slots[Substitution::kWidth];
};

struct Substitution::Branch {
  std::shared_ptr<const void> children[Substitution::kWidth];
};

template <class F>
void Substitution::visit(const void* node, unsigned level, std::uint64_t base, F& f) {
  if (level == 0) {
    const auto* leaf = static_cast<const Leaf*>(node);
    for (unsigned i = 0; i < kWidth; ++i) {
      if (leaf->slots[i].term) f(static_cast<VarId>((base << kBits) | i), leaf->slots[i]);
    }
    return;
  }
  const auto* branch = static_cast<const Branch*>(node);
  for (unsigned i = 0; i < kWidth; ++i) {
    if (branch->children[i]) {
      visit(branch->children[i].get(), level - 1, (base << kBits) | i, f);
    }
  }
}

}  // namespace conprove
