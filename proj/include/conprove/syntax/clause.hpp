#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "conprove/syntax/term.hpp"

namespace conprove {

struct Literal {
  bool positive = true;
  SymbolId predicate = 0;
  std::vector<Term> args;

  Literal complement() const { return Literal{!positive, predicate, args}; }
  bool is_top() const { return predicate == Signature::kTop && args.empty(); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.predicate == b.predicate && a.args == b.args;
  }
};

inline Literal top_literal(bool positive) { return Literal{positive, Signature::kTop, {}}; }

struct Clause {
  std::vector<Literal> literals;
  // Index of the input declaration this clause was produced from.
  std::size_t origin = 0;
  std::string name;
  // Variables are numbered 0..num_vars-1 within the clause.
  VarIndex num_vars = 0;
  std::vector<std::string> var_names;

  // Start-rule eligibility. The reserved top literal does not count.
  bool is_positive() const {
    return std::all_of(literals.begin(), literals.end(),
                       [](const Literal& l) { return l.positive || l.is_top(); });
  }

  // Number of literals excluding the start marker.
  std::size_t proper_size() const {
    return static_cast<std::size_t>(std::count_if(literals.begin(), literals.end(),
                                                   [](const Literal& l) { return !l.is_top(); }));
  }
};

}  // namespace conprove
