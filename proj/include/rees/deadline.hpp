#pragma once

#include <chrono>
#include <optional>

#include "rees/error.hpp"

namespace rees {

// Cooperative cancellation token. A default-constructed deadline never fires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check() const {
    if (expired()) throw Error(ErrorCode::DeadlineExceeded, "deadline exceeded");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace rees
