#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conprove/syntax/clause.hpp"
#include "conprove/syntax/formula.hpp"

namespace conprove {

struct IndexEntry {
  std::uint32_t clause;
  std::uint32_t literal;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

// A clause set together with the extension index. Clause storage lives on
// the heap, so references into a matrix survive moves of the Matrix object.
class Matrix {
 public:
  Matrix();
  Matrix(Signature signature, std::vector<Clause> clauses);

  const Signature& signature() const { return *signature_; }
  std::span<const Clause> clauses() const { return *clauses_; }
  const Clause& clause(std::size_t i) const { return (*clauses_)[i]; }
  std::size_t size() const { return clauses_->size(); }

  // The single-literal goal clause {+top} that the search starts from.
  const Clause& top_clause() const { return *top_; }

  // Index entries whose literal has the given predicate and the opposite
  // polarity, i.e. all extension candidates for a goal literal with this key.
  std::span<const IndexEntry> candidates(SymbolId predicate, bool positive) const;

  bool prepared() const { return prepared_; }
  bool has_positive_clause() const;

  // Canonical TPTP cnf text; the digest is a stable hash of this text.
  std::string print() const;
  std::uint64_t digest() const;

  friend Matrix prepare_matrix(Matrix m);

 private:
  void build_index();

  std::shared_ptr<Signature> signature_;
  std::shared_ptr<std::vector<Clause>> clauses_;
  std::shared_ptr<Clause> top_;
  std::vector<std::vector<IndexEntry>> index_;
  bool prepared_ = false;
};

// Adds the start marker literal ~top in front of every positive clause and
// builds the extension index. Idempotent.
Matrix prepare_matrix(Matrix m);

class ClausifyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClausifyOptions {
  // Naive distribution aborts once the produced clauses of one formula hold
  // more literals than this.
  std::size_t max_literals = 200000;
  // Append reflexivity, symmetry, transitivity and congruence axioms when the
  // problem mentions '='.
  bool equality_axioms = false;
};

// Negates conjectures, converts to negation normal form, skolemizes with
// content-derived names and distributes into clauses.
Matrix clausify(const Problem& problem, const ClausifyOptions& options = {});

// Name of the Skolem symbol for the index-th variable of an existential
// subformula with the given canonical text.
std::string skolem_name(std::string_view canonical, std::size_t index);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex16(std::uint64_t v);

}  // namespace conprove
