#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conprove/calculus/certificate.hpp"
#include "conprove/calculus/state.hpp"
#include "conprove/training/store.hpp"

namespace conprove {

struct DeepeningOptions {
  std::uint32_t start_depth = 1;
  std::uint32_t increment = 1;
  // Largest depth bound tried; unset means no cap.
  std::optional<std::uint32_t> max_depth;
  bool cut = false;
  std::optional<double> time_budget;
  // Limit on extension steps over all iterations.
  std::optional<std::uint64_t> inference_budget;
  bool collect_training = false;
  bool regularity = true;
  bool lemmas = true;
};

// Throws std::invalid_argument on start or increment of 0.
void validate(const DeepeningOptions& opts);

enum class SearchResult { Proof, Saturated, NoStartClause, Timeout, BudgetSpent };

std::string to_string(SearchResult r);

struct DeepeningStats {
  // Steps taken by the search over all iterations.
  std::uint64_t extensions = 0;
  std::uint64_t reductions = 0;
  std::uint64_t lemmas = 0;
  std::uint32_t iterations = 0;
  std::uint32_t max_depth_reached = 0;
};

struct SearchOutcome {
  SearchResult result = SearchResult::Saturated;
  // Depth bound of the last iteration.
  std::uint32_t depth = 0;
  // For Saturated: true if the space was exhausted with no depth pruning and
  // no cut, so no proof exists under the calculus options.
  bool exhaustive = false;
  std::optional<ProofCertificate> certificate;
  // Inference counts along the proof (the certificate path).
  InferenceCounts proof_counts;
  DeepeningStats stats;
  // Events of the final iteration, present only for proofs with
  // collect_training set.
  std::vector<TrainingEvent> events;
};

SearchOutcome prove_iterative(const Matrix& m, const DeepeningOptions& opts);

}  // namespace conprove
