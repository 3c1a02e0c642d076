#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conprove/calculus/state.hpp"

namespace conprove {

struct ProofCertificate {
  std::uint64_t matrix_digest = 0;
  std::vector<Action> actions;

  friend bool operator==(const ProofCertificate&, const ProofCertificate&) = default;
};

class CertificateFormatError : public std::runtime_error {
 public:
  CertificateFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ProofCertificate make_certificate(const Matrix& m, const ProverState& closed);

// "proof <digest>" followed by one action per line.
std::string format_certificate(const ProofCertificate& cert);
ProofCertificate parse_certificate(std::string_view text);

struct CheckResult {
  bool accepted = false;
  // Index of the first rejected action; equals the action count for errors
  // detected after the last action (or before the first, for digest errors).
  std::size_t failed_step = 0;
  std::string reason;
  std::uint64_t extensions = 0;
};

// Replays the certificate through the branching connection calculus with a
// separate term representation and unifier. Regularity and depth are not
// checked; any calculus-valid proof is accepted.
CheckResult check_proof(const Matrix& m, const ProofCertificate& cert);

}  // namespace conprove
