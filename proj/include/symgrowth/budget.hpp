#pragma once

#include <cstdint>
#include <string_view>

namespace symgrowth {

inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

/// Maximum number of element pairs (or quadruples, for the energy oracle) a
/// single operation may visit. Initialised from SYMGROWTH_BUDGET_PAIRS when
/// set, else kDefaultPairBudget. Process-wide and thread-safe.
std::uint64_t pair_budget() noexcept;
void set_pair_budget(std::uint64_t pairs) noexcept;

/// Throws BudgetExceeded when `pairs` is over the current budget.
void charge_pairs(std::uint64_t pairs, std::string_view operation);

/// Saturating multiply, so budget checks never overflow.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

/// Restores the previous budget on scope exit.
class ScopedPairBudget {
public:
    explicit ScopedPairBudget(std::uint64_t pairs) noexcept : saved_(pair_budget()) { set_pair_budget(pairs); }
    ~ScopedPairBudget() { set_pair_budget(saved_); }
    ScopedPairBudget(const ScopedPairBudget&) = delete;
    ScopedPairBudget& operator=(const ScopedPairBudget&) = delete;

private:
    std::uint64_t saved_;
};

}  // namespace symgrowth
