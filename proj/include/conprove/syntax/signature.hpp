#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace conprove {

using SymbolId = std::uint32_t;

// Interned predicate and function names. Predicates and functors share one
// namespace; arity is carried by the use site, not the symbol.
class Signature {
 public:
  // Reserved name of the start literal used to emulate the Start rule.
  static constexpr std::string_view kTopName = "$top";
  static constexpr SymbolId kTop = 0;

  Signature();

  SymbolId intern(std::string_view name);
  const std::string& name(SymbolId id) const { return names_.at(id); }
  bool contains(std::string_view name) const;
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const Signature& a, const Signature& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

}  // namespace conprove
