#pragma once

#include <chrono>
#include <optional>

#include "adomian/error.hpp"

namespace adomian {

// Cooperative wall-clock budget. Long-running generators poll check(),
// which throws Timeout once the budget is spent.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.until_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return until_ && Clock::now() >= *until_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace adomian
