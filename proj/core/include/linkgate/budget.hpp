#pragma once

#include <chrono>
#include <cstdint>
#include <memory>

namespace linkgate {

// Cooperative budget token. Long-running searches (factorization, subgroup
// enumeration) poll tick(); when the deadline or step cap is hit they stop
// and report "unavailable" instead of guessing.
class Budget {
 public:
  Budget() = default;

  static Budget with_millis(std::int64_t ms) {
    Budget b;
    b.deadline_ = clock::now() + std::chrono::milliseconds(ms);
    b.has_deadline_ = true;
    return b;
  }

  static Budget with_steps(std::uint64_t steps) {
    Budget b;
    b.step_cap_ = steps;
    return b;
  }

  // Returns false once exhausted. Callers decide whether that means an
  // Unknown verdict or a BudgetError.
  bool tick(std::uint64_t steps = 1) {
    std::uint64_t prev = steps_;
    steps_ += steps;
    if (step_cap_ && steps_ > step_cap_) exhausted_ = true;
    if (has_deadline_ && (steps_ >> 6) != (prev >> 6) &&
        clock::now() > deadline_)
      exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point deadline_{};
  bool has_deadline_ = false;
  std::uint64_t step_cap_ = 0;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace linkgate
