#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "symgrowth/gset.hpp"
#include "symgrowth/ledger.hpp"
#include "symgrowth/rational.hpp"
#include "symgrowth/symmetry.hpp"

namespace symgrowth {

/// A' can be replaced by A'' = A' cap tA', whose product with A is a
/// (1 - eps) fraction smaller.
struct ShrinkCase {
    GSet shrunk;
    Element witness;
    std::uint64_t shrunk_product_size = 0;  ///< |A''A|
};

/// No t in L shrinks A'A, so L sits inside Sym_{1-eps}(A'A).
struct TerminateCase {
    SymmetrySet sym;
};

struct LemmaOutcome {
    std::variant<ShrinkCase, TerminateCase> result;
    GSet level_set;                         ///< L = {t : |A' cap tA'| >= tau}
    Rational tau;                           ///< |A'|^4 / (2 |A'A| |A|^2)
    std::uint64_t aprime_size = 0;
    std::uint64_t a_size = 0;
    std::uint64_t aprime_a_size = 0;        ///< |A'A|
    Ledger ledger;                          ///< names are step_entry(step, ...)

    bool is_shrink() const noexcept { return std::holds_alternative<ShrinkCase>(result); }
    const ShrinkCase& shrink() const { return std::get<ShrinkCase>(result); }
    const TerminateCase& terminate() const { return std::get<TerminateCase>(result); }
};

/// One application of the shrink-or-terminate dichotomy to (A', A).
///
/// Computes tau and the level set L over the candidates t in A'A'^-1, then
/// scans L in canonical order and returns Shrink for the first t with
/// |(A' cap tA')A| <= (1 - eps)|A'A|; otherwise Terminate with
/// Sym_{1-eps}(A'A). For eps = 1 the threshold 1 - eps is not a valid
/// symmetry level and 1/|A'A| (the whole support) is used instead.
///
/// Every inequality of the dichotomy is recorded in the ledger and checked;
/// a failure throws InvariantViolation. `step` only labels ledger entries.
LemmaOutcome lemma_step(const GSet& aprime, const GSet& a, const Rational& eps, std::uint64_t step = 0);

/// Threshold of the terminating symmetry set: 1 - eps, or 1/|A'A| when eps = 1.
Rational terminal_threshold(const Rational& eps, std::uint64_t aprime_a_size);

enum class StepCase { Shrink, Terminate };

struct TraceStep {
    std::uint64_t index = 0;
    std::uint64_t aprime_size = 0;
    std::uint64_t aprime_a_size = 0;
    StepCase kind = StepCase::Terminate;
    std::optional<Element> witness;
    std::uint64_t level_set_size = 0;
    Rational tau;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct IterationTrace {
    Rational epsilon;
    Rational k0;                 ///< |A^2| / |A|
    std::uint64_t i0 = 0;        ///< number of shrink steps taken
    std::uint64_t i0_bound = 0;  ///< ceil(log K0 / -log(1 - eps))
    std::vector<TraceStep> steps;

    friend bool operator==(const IterationTrace&, const IterationTrace&) = default;
};

struct PropositionResult {
    GSet aprime;
    SymmetrySet sym;
    IterationTrace trace;
    GSet level_set;  ///< L of the terminating step
    Ledger ledger;   ///< every lemma ledger plus the trace bounds
};

/// Iterates lemma_step from A'_0 = A until it terminates.
PropositionResult proposition_run(const GSet& a, const Rational& eps);

/// Trace bounds: growth and size decay per step, the termination bound, and
/// immediate termination when K0 < 1/(1 - eps). Entry names are trace_entry().
Ledger trace_ledger(const IterationTrace& trace, std::uint64_t a_size);

struct Certificate {
    json instance;  ///< instance spec, or null when built from a bare set
    unsigned k = 0;
    Rational epsilon;
    GSet aprime;
    GSet s;
    IterationTrace trace;
    Ledger ledger;
    bool verified = false;
};

/// Croot-Sisask comparison bound, carried as inert metadata.
inline constexpr const char* kComparisonBound = "|S| >= exp(-O(k^2 K log K))|A| (Croot-Sisask)";

/// Runs the proposition with eps = 1/(k+1) and certifies S = Sym_{1-eps}(A'A):
/// S is a symmetric neighbourhood of 1, S^k lies in Sym_{1/(k+1)}(A'A) and in
/// A^2 A^-2, and |S| >= |A'|^3 / (2|A'A||A|). A failed check yields
/// verified = false rather than an exception.
Certificate theorem_main(const GSet& a, unsigned k, json instance = nullptr);

struct AlmostInvariantPair {
    Certificate certificate;
    GSet s;
    unsigned l = 0;
    GSet astar;                        ///< S^l A
    Rational ratio;                    ///< |S^{l+1}A| / |S^l A|
    std::vector<std::uint64_t> chain;  ///< |S^j A| for j = 0..k
    Ledger ledger;
    bool verified = false;
};

/// Pigeonholes the chain A within SA within ... within S^k A for the step of
/// smallest growth ratio (ties to the smallest l).
AlmostInvariantPair almost_invariant(const GSet& a, unsigned k, json instance = nullptr);

}  // namespace symgrowth
