#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace semirank {

/// Limits for the combinatorial searches.  Zero means "no limit".
///
/// The rank searches accept any matrix up to 12x12 with the default budget;
/// larger inputs require explicit_budget so that runaway searches are an
/// explicit caller choice rather than an accident.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    bool explicit_budget = false;

    /// cone_elements refuses more generators than this (elements can reach 2^limit).
    std::size_t cone_enumeration_limit = 20;
    /// boolean_independent refuses larger collections (subset enumeration).
    std::size_t independence_limit = 22;
    /// count_h_solutions refuses a wider W (2^R mixings are enumerated).
    std::size_t mixing_limit = 20;
};

namespace detail {

/// Node counter plus optional deadline shared by the search routines.
class BudgetGauge {
public:
    explicit BudgetGauge(const SearchBudget& budget, std::uint64_t default_nodes = 0)
        : max_nodes_(budget.max_nodes ? budget.max_nodes : default_nodes),
          use_deadline_(budget.max_seconds > 0.0) {
        if (use_deadline_) {
            auto span = std::chrono::duration<double>(budget.max_seconds);
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(span);
        }
    }

    /// Counts one search node; returns false once the budget is spent.
    bool tick() {
        ++nodes_;
        if (max_nodes_ != 0 && nodes_ > max_nodes_) return false;
        // The clock is only consulted every 1024 nodes; it is far more
        // expensive than the counter.
        if (use_deadline_ && (nodes_ & 0x3ffu) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_ = 0;
    bool use_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

} // namespace detail
} // namespace semirank
