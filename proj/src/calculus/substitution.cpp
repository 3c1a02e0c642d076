#include "conprove/calculus/substitution.hpp"

#include <vector>

namespace conprove {

const BoundTerm* Substitution::find(VarId v) const {
  if (!root_ || v >= capacity()) return nullptr;
  const void* node = root_.get();
  for (unsigned level = levels_; level > 0; --level) {
    const auto* branch = static_cast<const Branch*>(node);
    const auto& child = branch->children[(v >> (kBits * level)) & (kWidth - 1)];
    if (!child) return nullptr;
    node = child.get();
  }
  const auto& slot = static_cast<const Leaf*>(node)->slots[v & (kWidth - 1)];
  return slot.term ? &slot : nullptr;
}

Substitution Substitution::bind(VarId v, BoundTerm t) const {
  Substitution out = *this;
  if (!out.root_) out.root_ = std::make_shared<const Leaf>();
  while (v >= out.capacity()) {
    auto grown = std::make_shared<Branch>();
    grown->children[0] = out.root_;
    out.root_ = std::move(grown);
    ++out.levels_;
  }

  // Rebuild the path bottom-up from copies of the existing nodes.
  std::vector<const void*> path;
  path.reserve(out.levels_ + 1);
  const void* node = out.root_.get();
  for (unsigned level = out.levels_; level > 0; --level) {
    path.push_back(node);
    if (node) node = static_cast<const Branch*>(node)->children[(v >> (kBits * level)) & (kWidth - 1)].get();
  }

  auto leaf = node ? std::make_shared<Leaf>(*static_cast<const Leaf*>(node)) : std::make_shared<Leaf>();
  auto& slot = leaf->slots[v & (kWidth - 1)];
  if (!slot.term) ++out.size_;
  slot = t;
  std::shared_ptr<const void> built = std::move(leaf);
  for (unsigned level = 1; level <= out.levels_; ++level) {
    const auto* old = static_cast<const Branch*>(path[out.levels_ - level]);
    auto copy = old ? std::make_shared<Branch>(*old) : std::make_shared<Branch>();
    copy->children[(v >> (kBits * level)) & (kWidth - 1)] = std::move(built);
    built = std::move(copy);
  }
  out.root_ = std::move(built);
  return out;
}

}  // namespace conprove
