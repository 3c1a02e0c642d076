#include <unordered_map>

#include "conprove/training/store.hpp"

namespace conprove {

namespace {

class Serializer {
 public:
  explicit Serializer(const Signature& sig) : sig_(sig) {}

  void literal(const Literal& l) {
    out_ += l.positive ? '+' : '-';
    name(l.predicate);
    u32(static_cast<std::uint32_t>(l.args.size()));
    for (const Term& t : l.args) term(t);
  }

  void reset_vars() { vars_.clear(); }
  std::string& out() { return out_; }

 private:
  void term(const Term& t) {
    if (t.is_var()) {
      out_ += 'V';
      auto [it, fresh] = vars_.emplace(t.var(), static_cast<std::uint32_t>(vars_.size()));
      u32(it->second);
      return;
    }
    out_ += 'F';
    name(t.functor());
    u32(static_cast<std::uint32_t>(t.args().size()));
    for (const Term& a : t.args()) term(a);
  }

  void name(SymbolId s) {
    out_ += sig_.name(s);
    out_ += '\0';
  }

  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_ += static_cast<char>((v >> (8 * i)) & 0xff);
  }

  const Signature& sig_;
  std::string out_;
  std::unordered_map<VarIndex, std::uint32_t> vars_;
};

}  // namespace

std::string canonical_literal(const Signature& sig, const Literal& l) {
  Serializer s(sig);
  s.literal(l);
  return std::move(s.out());
}

std::string canonical_clause(const Signature& sig, const Clause& c) {
  Serializer s(sig);
  s.out() += 'C';
  for (const Literal& l : c.literals) {
    if (!l.is_top()) s.literal(l);
  }
  return std::move(s.out());
}

LiteralKey key_of(const Signature& sig, const Literal& l, const Clause& origin) {
  return LiteralKey{fnv1a64(canonical_literal(sig, l)), fnv1a64(canonical_clause(sig, origin))};
}

std::vector<std::vector<LiteralKey>> literal_keys(const Matrix& m) {
  std::vector<std::vector<LiteralKey>> out;
  out.reserve(m.size());
  for (const Clause& c : m.clauses()) {
    const std::uint64_t ch = fnv1a64(canonical_clause(m.signature(), c));
    auto& row = out.emplace_back();
    for (const Literal& l : c.literals) row.push_back(LiteralKey{fnv1a64(canonical_literal(m.signature(), l)), ch});
  }
  return out;
}

}  // namespace conprove
