#include "symgrowth/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

std::uint64_t initial_budget() noexcept {
    const char* env = std::getenv("SYMGROWTH_BUDGET_PAIRS");
    if (env == nullptr || *env == '\0') return kDefaultPairBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return kDefaultPairBudget;
    return v;
}

std::atomic<std::uint64_t>& budget_cell() noexcept {
    static std::atomic<std::uint64_t> cell{initial_budget()};
    return cell;
}

}  // namespace

std::uint64_t pair_budget() noexcept { return budget_cell().load(std::memory_order_relaxed); }

void set_pair_budget(std::uint64_t pairs) noexcept { budget_cell().store(pairs, std::memory_order_relaxed); }

void charge_pairs(std::uint64_t pairs, std::string_view operation) {
    const auto budget = pair_budget();
    if (pairs > budget) {
        throw BudgetExceeded(std::string(operation) + " needs " + std::to_string(pairs) +
                             " pairs, over the budget of " + std::to_string(budget));
    }
}

}  // namespace symgrowth
