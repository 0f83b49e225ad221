#pragma once

#include <chrono>
#include <cstdint>

#include "errors.hpp"

namespace mdim {

/// Limits for the exact searches: a cap on visited search nodes (candidate
/// subsets, assignments, branch-and-bound nodes) and a wall-clock cap.
struct SearchBudget {
    std::uint64_t max_subsets = 50'000'000;
    std::uint64_t max_millis = 60'000;

    void validate() const {
        if (max_subsets == 0)
            throw DomainError("search budget: max_subsets must be positive");
        if (max_millis == 0)
            throw DomainError("search budget: max_millis must be positive");
    }
};

/// Node counter plus deadline. tick() returns false once either limit is
/// exceeded; the wall clock is only polled every few thousand ticks.
class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& budget)
        : max_nodes_(budget.max_subsets),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::milliseconds(budget.max_millis)) {
        budget.validate();
    }

    bool tick() {
        if (++nodes_ > max_nodes_) return false;
        if ((nodes_ & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
    std::chrono::steady_clock::time_point deadline_;
};

namespace detail {

// Thrown by inner search loops; callers translate it into a BudgetError with
// the bounds they have proven at that point.
struct BudgetExhausted {};

}  // namespace detail

}  // namespace mdim
