#include "conprove/syntax/matrix.hpp"

#include <cstdio>
#include <sstream>

#include "conprove/syntax/tptp.hpp"

namespace conprove {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Matrix::Matrix() : Matrix(Signature{}, {}) {}

Matrix::Matrix(Signature signature, std::vector<Clause> clauses)
    : signature_(std::make_shared<Signature>(std::move(signature))),
      clauses_(std::make_shared<std::vector<Clause>>(std::move(clauses))),
      top_(std::make_shared<Clause>()) {
  top_->literals.push_back(top_literal(true));
  top_->name = "$start";
  top_->origin = static_cast<std::size_t>(-1);
  build_index();
}

void Matrix::build_index() {
  index_.assign(2 * signature_->size(), {});
  for (std::uint32_t c = 0; c < clauses_->size(); ++c) {
    const auto& lits = (*clauses_)[c].literals;
    for (std::uint32_t j = 0; j < lits.size(); ++j) {
      // Filed under the complementary key.
      const auto key = 2 * lits[j].predicate + (lits[j].positive ? 0 : 1);
      index_[key].push_back(IndexEntry{c, j});
    }
  }
}

std::span<const IndexEntry> Matrix::candidates(SymbolId predicate, bool positive) const {
  const auto key = 2 * static_cast<std::size_t>(predicate) + (positive ? 1 : 0);
  if (key >= index_.size()) return {};
  return index_[key];
}

bool Matrix::has_positive_clause() const {
  for (const auto& c : *clauses_) {
    if (c.is_positive()) return true;
  }
  return false;
}

std::string Matrix::print() const {
  std::ostringstream os;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < clauses_->size(); ++i) {
    const auto& c = (*clauses_)[i];
    names.clear();
    for (VarIndex v = 0; v < c.num_vars; ++v) names.push_back("X" + std::to_string(v));
    os << "cnf(c" << i << ", plain, (";
    if (c.literals.empty()) os << "$false";
    for (std::size_t j = 0; j < c.literals.size(); ++j) {
      if (j) os << " | ";
      os << print_literal(*signature_, c.literals[j], names);
    }
    os << ")).\n";
  }
  return os.str();
}

std::uint64_t Matrix::digest() const { return fnv1a64(print()); }

Matrix prepare_matrix(Matrix m) {
  if (m.prepared_) return m;
  auto clauses = std::make_shared<std::vector<Clause>>(*m.clauses_);
  for (auto& c : *clauses) {
    const bool marked =
        std::any_of(c.literals.begin(), c.literals.end(), [](const Literal& l) { return l.is_top(); });
    if (c.is_positive() && !marked) c.literals.insert(c.literals.begin(), top_literal(false));
  }
  m.clauses_ = std::move(clauses);
  m.prepared_ = true;
  m.build_index();
  return m;
}

}  // namespace conprove
