#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conprove/syntax/matrix.hpp"

namespace conprove {

struct LiteralKey {
  std::uint64_t literal_hash = 0;
  std::uint64_t clause_hash = 0;

  friend auto operator<=>(const LiteralKey&, const LiteralKey&) = default;
};

// Canonical byte layout, hashed with 64-bit FNV-1a:
//   literal: polarity byte '+'/'-', predicate name, 0x00, arity as 4 bytes
//   little endian, then the arguments in preorder, where a variable is 'V'
//   followed by its index in order of first occurrence (4 bytes LE) and an
//   application is 'F', name, 0x00, arity (4 bytes LE).
//   clause: 'C', then every literal except the start marker in clause order,
//   with variable indices numbered across the whole clause.
std::string canonical_literal(const Signature& sig, const Literal& l);
std::string canonical_clause(const Signature& sig, const Clause& c);

LiteralKey key_of(const Signature& sig, const Literal& l, const Clause& origin);

// Keys of every literal of every matrix clause, indexed [clause][literal].
std::vector<std::vector<LiteralKey>> literal_keys(const Matrix& m);

struct TrainingEvent {
  LiteralKey key;
  bool success = false;

  friend bool operator==(const TrainingEvent&, const TrainingEvent&) = default;
};

struct Stats {
  std::uint64_t p = 0;
  std::uint64_t n = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

class StoreFormatError : public std::runtime_error {
 public:
  StoreFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Success/failure counts per literal key. Counts saturate at UINT64_MAX;
// saturated() reports whether that ever happened.
class Store {
 public:
  static constexpr std::uint64_t kCeiling = UINT64_MAX;

  void record(const TrainingEvent& e);
  void record(const std::vector<TrainingEvent>& events);
  void add(const LiteralKey& key, const Stats& s);
  void merge(const Store& other);

  Stats get(const LiteralKey& key) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool saturated() const { return saturated_; }
  const std::map<LiteralKey, Stats>& entries() const { return entries_; }

  // One line "<literal hex16> <clause hex16> <p> <n>" per key in key order;
  // (0,0) entries are omitted.
  void persist(std::ostream& out) const;
  std::string persist() const;
  static Store load(std::istream& in);
  static Store load_file(const std::string& path);
  void save_file(const std::string& path) const;

  friend bool operator==(const Store& a, const Store& b);

 private:
  std::map<LiteralKey, Stats> entries_;
  bool saturated_ = false;
};

Store merge(Store a, const Store& b);

}  // namespace conprove
