#pragma once

#include <chrono>
#include <optional>

namespace conprove {

// Wall-clock budget checked cooperatively by the search loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() : start_(Clock::now()) {}
  explicit Deadline(std::optional<double> seconds) : start_(Clock::now()) {
    if (seconds) end_ = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

}  // namespace conprove
