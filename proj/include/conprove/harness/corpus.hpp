#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "conprove/syntax/matrix.hpp"

namespace conprove {

// Problem metadata from "% Status : ..." and "% Depth : ..." header comments.
struct ProblemInfo {
  std::string id;
  std::string path;
  std::string status;
  std::optional<std::uint32_t> depth;

  bool theorem() const { return status == "Theorem" || status == "Unsatisfiable"; }
  bool satisfiable() const { return status == "Satisfiable" || status == "CounterSatisfiable"; }
};

ProblemInfo read_problem_info(const std::string& path);

// All *.p files of a directory, sorted by id (the file stem).
std::vector<ProblemInfo> list_corpus(const std::string& dir);

struct LoadOptions {
  std::string include_dir;
  ClausifyOptions clausify;
};

// Parses, clausifies and prepares a problem file.
Matrix load_matrix(const std::string& path, const LoadOptions& opts = {});

// Runs f(0..count-1) on up to `jobs` threads; results are in index order.
template <class R>
std::vector<R> run_parallel(std::size_t count, unsigned jobs, const std::function<R(std::size_t)>& f) {
  std::vector<R> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs && t < count; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

// For each configuration, the problems it solved that no other one did, and
// for each ordered pair (a, b) the problems solved by a but not by b.
struct UniqueSolves {
  std::map<std::string, std::set<std::string>> unique;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> pairwise;
};

UniqueSolves unique_solves(const std::map<std::string, std::set<std::string>>& solved);

}  // namespace conprove
