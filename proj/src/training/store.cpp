#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "conprove/training/store.hpp"

namespace conprove {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
  if (a > Store::kCeiling - b) {
    saturated = true;
    return Store::kCeiling;
  }
  return a + b;
}

}  // namespace

void Store::record(const TrainingEvent& e) { add(e.key, e.success ? Stats{1, 0} : Stats{0, 1}); }

void Store::record(const std::vector<TrainingEvent>& events) {
  for (const auto& e : events) record(e);
}

void Store::add(const LiteralKey& key, const Stats& s) {
  if (s.p == 0 && s.n == 0) return;
  Stats& t = entries_[key];
  t.p = saturating_add(t.p, s.p, saturated_);
  t.n = saturating_add(t.n, s.n, saturated_);
}

void Store::merge(const Store& other) {
  for (const auto& [k, s] : other.entries_) add(k, s);
  saturated_ = saturated_ || other.saturated_;
}

Stats Store::get(const LiteralKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Stats{} : it->second;
}

void Store::persist(std::ostream& out) const {
  char buf[96];
  for (const auto& [k, s] : entries_) {
    if (s.p == 0 && s.n == 0) continue;
    std::snprintf(buf, sizeof buf, "%016llx %016llx %llu %llu\n", static_cast<unsigned long long>(k.literal_hash),
                  static_cast<unsigned long long>(k.clause_hash), static_cast<unsigned long long>(s.p),
                  static_cast<unsigned long long>(s.n));
    out << buf;
  }
}

std::string Store::persist() const {
  std::ostringstream os;
  persist(os);
  return os.str();
}

namespace {

std::uint64_t field(std::string_view w, int base, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v, base);
  if (w.empty() || ec != std::errc{} || p != w.data() + w.size()) {
    throw StoreFormatError(line, "bad field '" + std::string(w) + "'");
  }
  return v;
}

}  // namespace

Store Store::load(std::istream& in) {
  Store s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> w;
    std::string_view rest = line;
    while (!rest.empty()) {
      const auto sp = rest.find(' ');
      w.push_back(rest.substr(0, sp));
      if (sp == std::string_view::npos) break;
      rest = rest.substr(sp + 1);
    }
    if (w.size() != 4) throw StoreFormatError(line_no, "expected 4 fields");
    if (w[0].size() != 16 || w[1].size() != 16) throw StoreFormatError(line_no, "hash must be 16 hex digits");
    LiteralKey k{field(w[0], 16, line_no), field(w[1], 16, line_no)};
    s.add(k, Stats{field(w[2], 10, line_no), field(w[3], 10, line_no)});
  }
  return s;
}

Store Store::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  return load(in);
}

void Store::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file '" + path + "'");
  persist(out);
}

bool operator==(const Store& a, const Store& b) { return a.entries_ == b.entries_; }

Store merge(Store a, const Store& b) {
  a.merge(b);
  return a;
}

}  // namespace conprove
