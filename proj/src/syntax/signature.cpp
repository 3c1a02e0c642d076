#include "conprove/syntax/signature.hpp"

namespace conprove {

Signature::Signature() { intern(kTopName); }

SymbolId Signature::intern(std::string_view name) {
  std::string key(name);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<SymbolId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

bool Signature::contains(std::string_view name) const { return ids_.count(std::string(name)) != 0; }

}  // namespace conprove
