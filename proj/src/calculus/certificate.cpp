#include "conprove/calculus/certificate.hpp"

#include <charconv>
#include <sstream>

namespace conprove {

ProofCertificate make_certificate(const Matrix& m, const ProverState& closed) {
  return ProofCertificate{m.digest(), closed.actions()};
}

std::string format_certificate(const ProofCertificate& cert) {
  std::string out = "proof " + hex16(cert.matrix_digest) + "\n";
  for (const Action& a : cert.actions) out += to_string(a) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <class T>
T parse_number(std::string_view w, int base, std::size_t line) {
  T v{};
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v, base);
  if (ec != std::errc{} || p != w.data() + w.size()) {
    throw CertificateFormatError(line, "bad number '" + std::string(w) + "'");
  }
  return v;
}

}  // namespace

ProofCertificate parse_certificate(std::string_view text) {
  ProofCertificate cert;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto w = split_words(line);
    if (w.empty()) continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "proof" || w[1].size() != 16) {
        throw CertificateFormatError(line_no, "expected 'proof <digest>'");
      }
      cert.matrix_digest = parse_number<std::uint64_t>(w[1], 16, line_no);
      header = true;
      continue;
    }
    Action a;
    if (w[0] == "ext" && w.size() == 4) {
      a.kind = Action::Kind::Extension;
      a.b = parse_number<std::uint32_t>(w[3], 10, line_no);
    } else if (w[0] == "red" && w.size() == 3) {
      a.kind = Action::Kind::Reduction;
    } else if (w[0] == "lem" && w.size() == 3) {
      a.kind = Action::Kind::Lemma;
    } else {
      throw CertificateFormatError(line_no, "unknown action '" + std::string(line) + "'");
    }
    a.goal = parse_number<std::uint32_t>(w[1], 10, line_no);
    a.a = parse_number<std::uint32_t>(w[2], 10, line_no);
    cert.actions.push_back(a);
  }
  if (!header) throw CertificateFormatError(line_no, "missing header");
  return cert;
}

}  // namespace conprove
