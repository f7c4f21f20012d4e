#pragma once

#include <chrono>

namespace rupmss {

/// Wall-clock budget. A non-positive limit means "no limit".
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    // anything past ~30 years is "no limit"; it would overflow the clock
    if (seconds > 0 && seconds < 1e9) {
      unlimited_ = false;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    }
  }

  bool expired() const {
    return !unlimited_ && std::chrono::steady_clock::now() >= end_;
  }

  double remaining_seconds() const {
    if (unlimited_) return 1e18;
    const auto left = end_ - std::chrono::steady_clock::now();
    return std::chrono::duration<double>(left).count();
  }

 private:
  bool unlimited_ = true;
  std::chrono::steady_clock::time_point end_{};
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace rupmss
