#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdim {

/// Invalid argument or input violating a documented precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input graph is not connected. All distance-based predicates assume finite
/// distances, so disconnected inputs are rejected where they first appear.
class DisconnectedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exact search exhausted its node or wall-clock budget. Carries the best
/// bounds proven before the abort; no uncertified optimum is ever returned.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, std::int64_t lower, std::int64_t upper,
                std::uint64_t nodes)
        : std::runtime_error(msg),
          lower_bound(lower),
          upper_bound(upper),
          nodes_explored(nodes) {}

    std::int64_t lower_bound;
    std::int64_t upper_bound;
    std::uint64_t nodes_explored;
};

}  // namespace mdim
