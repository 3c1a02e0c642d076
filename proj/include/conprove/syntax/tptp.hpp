#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conprove/syntax/formula.hpp"

namespace conprove {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IncludeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for TPTP constructs outside the cnf/fof subset (thf, tff, ...).
class UnsupportedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  // Searched first when resolving include directives.
  std::filesystem::path include_dir;
  // Directory of the file being parsed; searched second.
  std::filesystem::path base_dir;
};

Problem parse_problem(std::string_view text, const ParseOptions& options = {});
Problem parse_problem_file(const std::filesystem::path& file, ParseOptions options = {});

// TPTP text of the problem. Parsing the output yields a problem equal
// under problems_equal.
std::string print_problem(const Problem& problem);
std::string print_term(const Signature& sig, const Term& t, const std::vector<std::string>& var_names);
std::string print_literal(const Signature& sig, const Literal& l, const std::vector<std::string>& var_names);

}  // namespace conprove
