/// \file budget.hpp
/// Budgets for the exhaustive search kernels.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace convcode {

struct SearchBudget {
    /// deterministic cap on expanded search nodes
    std::uint64_t max_nodes = 500'000'000;
    /// optional wall-clock deadline (CLI --budget-seconds)
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchBudget seconds(double s) {
        SearchBudget b;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(s));
        return b;
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const char* what) : std::runtime_error(what) {}
};

namespace detail {
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b) : b_(b) {}
    /// returns false once the budget is exhausted
    bool tick() {
        if (++nodes_ > b_.max_nodes) return false;
        if (b_.deadline && (nodes_ & 0xFFFF) == 0 &&
            std::chrono::steady_clock::now() > *b_.deadline)
            return false;
        return true;
    }

private:
    const SearchBudget& b_;
    std::uint64_t nodes_ = 0;
};
}  // namespace detail

}  // namespace convcode
