#include "conprove/harness/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "conprove/syntax/tptp.hpp"

namespace conprove {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProblemInfo read_problem_info(const std::string& path) {
  ProblemInfo info;
  info.path = path;
  info.id = std::filesystem::path(path).stem().string();
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '%') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = trim(line.substr(1, colon - 1));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "Status") {
      info.status = value;
    } else if (key == "Depth") {
      try {
        info.depth = static_cast<std::uint32_t>(std::stoul(value));
      } catch (const std::exception&) {
      }
    }
  }
  return info;
}

std::vector<ProblemInfo> list_corpus(const std::string& dir) {
  std::vector<ProblemInfo> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".p") out.push_back(read_problem_info(e.path().string()));
  }
  std::sort(out.begin(), out.end(), [](const ProblemInfo& a, const ProblemInfo& b) { return a.id < b.id; });
  return out;
}

Matrix load_matrix(const std::string& path, const LoadOptions& opts) {
  ParseOptions p;
  p.include_dir = opts.include_dir;
  Problem problem = parse_problem_file(path, p);
  return prepare_matrix(clausify(problem, opts.clausify));
}

UniqueSolves unique_solves(const std::map<std::string, std::set<std::string>>& solved) {
  UniqueSolves u;
  for (const auto& [a, sa] : solved) {
    std::set<std::string> only = sa;
    for (const auto& [b, sb] : solved) {
      if (a == b) continue;
      std::set<std::string> diff;
      std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(diff, diff.end()));
      u.pairwise[{a, b}] = diff;
      for (const auto& p : sb) only.erase(p);
    }
    u.unique[a] = only;
  }
  return u;
}

}  // namespace conprove
