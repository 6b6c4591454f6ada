#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symgrowth/rational.hpp"

namespace symgrowth {

enum class Relation { LessEqual, GreaterEqual, Equal };

std::string_view relation_symbol(Relation r) noexcept;
Relation parse_relation(std::string_view symbol);

/// One exact inequality (or equality) checked during a run.
struct LedgerEntry {
    std::string name;
    Rational lhs;
    Relation relation = Relation::Equal;
    Rational rhs;
    bool holds = false;

    friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

using Ledger = std::vector<LedgerEntry>;

/// Builds an entry and evaluates it.
LedgerEntry make_entry(std::string name, Rational lhs, Relation relation, Rational rhs);

bool all_hold(const Ledger& ledger) noexcept;

/// "step[3].level_set_lower_bound" and friends. Shared by the driver and the
/// verifier so both sides name the same inequality the same way.
std::string step_entry(std::uint64_t step, std::string_view what);
std::string trace_entry(std::uint64_t step, std::string_view what);

}  // namespace symgrowth

namespace symgrowth::entry {

// Per lemma step.
inline constexpr std::string_view kEnergyDomination = "energy_domination";
inline constexpr std::string_view kEnergyCauchySchwarz = "energy_cauchy_schwarz";
inline constexpr std::string_view kEnergySymmetry = "energy_symmetry";
inline constexpr std::string_view kLevelSetSplit = "level_set_split";
inline constexpr std::string_view kLevelSetLowerBound = "level_set_lower_bound";
inline constexpr std::string_view kShrinkSize = "shrink_size";
inline constexpr std::string_view kShrinkGrowth = "shrink_growth";
inline constexpr std::string_view kShrinkOutsideAprime = "shrink_outside_aprime";
inline constexpr std::string_view kTerminateSymSize = "terminate_sym_size";
inline constexpr std::string_view kTerminateLevelSetOutsideSym = "terminate_level_set_outside_sym";

// Per trace step.
inline constexpr std::string_view kTraceGrowth = "growth_bound";
inline constexpr std::string_view kTraceSize = "size_bound";
// Used instead of size_bound once (2 K0)^((4^i - 1)/3) exceeds |A|, where
// the exact bound is below 1 and |A'_i| >= 1 is the stronger statement.
inline constexpr std::string_view kTraceSizeBelowOne = "size_bound_below_one";

// Whole run.
inline constexpr std::string_view kTerminationBound = "trace.termination_bound";
inline constexpr std::string_view kImmediateTermination = "trace.immediate_termination";
inline constexpr std::string_view kIdentityInS = "theorem.identity_in_s";
inline constexpr std::string_view kSymmetryDefect = "theorem.symmetry_defect";
inline constexpr std::string_view kSLowerBound = "theorem.s_lower_bound";
inline constexpr std::string_view kPowerOutsideSym = "theorem.power_outside_sym";
inline constexpr std::string_view kPowerEscapes = "theorem.power_escapes_double_difference";

}  // namespace symgrowth::entry
