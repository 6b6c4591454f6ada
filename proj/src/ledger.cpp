#include "symgrowth/ledger.hpp"

#include <algorithm>

#include "symgrowth/error.hpp"

namespace symgrowth {

std::string_view relation_symbol(Relation r) noexcept {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "==";
    }
    return "==";
}

Relation parse_relation(std::string_view symbol) {
    if (symbol == "<=") return Relation::LessEqual;
    if (symbol == ">=") return Relation::GreaterEqual;
    if (symbol == "==") return Relation::Equal;
    throw ParseError("unknown ledger relation '" + std::string(symbol) + "'");
}

LedgerEntry make_entry(std::string name, Rational lhs, Relation relation, Rational rhs) {
    bool holds = false;
    switch (relation) {
        case Relation::LessEqual: holds = lhs <= rhs; break;
        case Relation::GreaterEqual: holds = lhs >= rhs; break;
        case Relation::Equal: holds = lhs == rhs; break;
    }
    return LedgerEntry{std::move(name), std::move(lhs), relation, std::move(rhs), holds};
}

bool all_hold(const Ledger& ledger) noexcept {
    return std::all_of(ledger.begin(), ledger.end(), [](const LedgerEntry& e) { return e.holds; });
}

std::string step_entry(std::uint64_t step, std::string_view what) {
    return "step[" + std::to_string(step) + "]." + std::string(what);
}

std::string trace_entry(std::uint64_t step, std::string_view what) {
    return "trace[" + std::to_string(step) + "]." + std::string(what);
}

}  // namespace symgrowth
