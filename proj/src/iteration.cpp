#include "symgrowth/iteration.hpp"

#include <algorithm>

#include "symgrowth/error.hpp"
#include "symgrowth/oracle.hpp"
#include "symgrowth/set_arith.hpp"

namespace symgrowth {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) { return Rational(Integer(num), Integer(den)); }

Rational count(std::uint64_t n) { return Rational(Integer(n)); }

void require_epsilon(const Rational& eps) {
    if (eps <= 0 || eps > 1) throw InvalidArgument("epsilon must lie in (0,1], got " + to_string(eps));
}

void enforce(const Ledger& ledger, const char* where) {
    for (const auto& e : ledger) {
        if (!e.holds) {
            throw InvariantViolation(std::string(where) + ": " + e.name + " failed (" + to_string(e.lhs) + " " +
                                     std::string(relation_symbol(e.relation)) + " " + to_string(e.rhs) + ")");
        }
    }
}

// A'_t = A' cap tA' = {x in A' : t^-1 x in A'}.
GSet overlap(const GSet& aprime, Element t) {
    const auto& g = aprime.group();
    const Element t_inv = g.inverse(t);
    std::vector<Element> out;
    for (const auto x : aprime) {
        if (aprime.contains(g.multiply(t_inv, x))) out.push_back(x);
    }
    return GSet::from_sorted_unique(aprime.group_ptr(), std::move(out));
}

// Some element of `source` outside `target`, scanning in order.
bool escapes(const GSet& source, const GSet& target) {
    return std::any_of(source.begin(), source.end(), [&](Element x) { return !target.contains(x); });
}

}  // namespace

Rational terminal_threshold(const Rational& eps, std::uint64_t aprime_a_size) {
    if (eps < 1) return 1 - eps;
    return ratio(1, aprime_a_size);
}

LemmaOutcome lemma_step(const GSet& aprime, const GSet& a, const Rational& eps, std::uint64_t step) {
    require_same_group(aprime, a);
    if (aprime.empty() || a.empty()) throw EmptySet("lemma_step requires non-empty A' and A");
    require_epsilon(eps);
    if (!is_subset(aprime, a)) throw SubsetViolation("lemma_step requires A' to be a subset of A");

    const auto aprime_a = product(aprime, a);
    const std::uint64_t n_ap = aprime.size();
    const std::uint64_t n_a = a.size();
    const std::uint64_t n_apa = aprime_a.size();

    LemmaOutcome out{ShrinkCase{GSet(a.group_ptr()), Element{}, 0}, GSet(a.group_ptr()), {}, n_ap, n_a, n_apa, {}};
    const Integer ap(n_ap);
    out.tau = Rational(ap * ap * ap * ap, Integer(2) * n_apa * n_a * n_a);

    // 1_{A'} * 1_{A'^-1}(t) = |A' cap tA'|; outside A'A'^-1 it vanishes, and tau > 0.
    const auto overlaps = conv_table(aprime, inverse_set(aprime));
    std::vector<Element> level;
    for (std::size_t i = 0; i < overlaps.values.size(); ++i) {
        if (count(overlaps.values[i]) >= out.tau) level.push_back(overlaps.support[i]);
    }
    out.level_set = GSet::from_sorted_unique(a.group_ptr(), std::move(level));
    const std::uint64_t n_level = out.level_set.size();

    // Counting chain behind the lower bound on |L|.
    const std::uint64_t mixed_energy = self_energy(a, aprime);
    const std::uint64_t aprime_energy = self_energy(aprime, aprime);
    const std::uint64_t swapped_energy = pair_energy(inverse_set(a), a, aprime, inverse_set(aprime));
    auto& ledger = out.ledger;
    ledger.push_back(make_entry(step_entry(step, entry::kEnergyDomination), count(mixed_energy),
                                Relation::GreaterEqual, count(aprime_energy)));
    ledger.push_back(make_entry(step_entry(step, entry::kEnergyCauchySchwarz), count(aprime_energy),
                                Relation::GreaterEqual, Rational(ap * ap * ap * ap, Integer(n_apa))));
    ledger.push_back(make_entry(step_entry(step, entry::kEnergySymmetry), count(mixed_energy), Relation::Equal,
                                count(swapped_energy)));
    ledger.push_back(make_entry(step_entry(step, entry::kLevelSetSplit),
                                count(n_level) * n_a * n_ap + out.tau * n_a * n_a, Relation::GreaterEqual,
                                count(mixed_energy)));
    ledger.push_back(make_entry(step_entry(step, entry::kLevelSetLowerBound), count(n_level),
                                Relation::GreaterEqual, Rational(ap * ap * ap, Integer(2) * n_apa * n_a)));

    // c = |A'|/|A| and K = |A'A|/|A| as in the dichotomy's conclusion.
    const Rational c = ratio(n_ap, n_a);
    const Rational k = ratio(n_apa, n_a);
    const Rational shrink_limit = (1 - eps) * n_apa;

    for (const auto t : out.level_set) {
        auto shrunk = overlap(aprime, t);
        const std::uint64_t grown = product(shrunk, a).size();
        if (count(grown) <= shrink_limit) {
            ledger.push_back(make_entry(step_entry(step, entry::kShrinkSize), count(shrunk.size()),
                                        Relation::GreaterEqual, rational_pow(c, 4) * n_a / (2 * k)));
            ledger.push_back(make_entry(step_entry(step, entry::kShrinkGrowth), count(grown), Relation::LessEqual,
                                        shrink_limit));
            ledger.push_back(make_entry(step_entry(step, entry::kShrinkOutsideAprime),
                                        count(set_difference(shrunk, aprime).size()), Relation::Equal, count(0)));
            out.result = ShrinkCase{std::move(shrunk), t, grown};
            enforce(ledger, "lemma_step");
            return out;
        }
    }

    auto sym = sym_set(aprime_a, terminal_threshold(eps, n_apa));
    ledger.push_back(make_entry(step_entry(step, entry::kTerminateSymSize), count(sym.members.size()),
                                Relation::GreaterEqual, rational_pow(c, 3) * n_a / (2 * k)));
    ledger.push_back(make_entry(step_entry(step, entry::kTerminateLevelSetOutsideSym),
                                count(set_difference(out.level_set, sym.members).size()), Relation::Equal, count(0)));
    out.result = TerminateCase{std::move(sym)};
    enforce(ledger, "lemma_step");
    return out;
}

Ledger trace_ledger(const IterationTrace& trace, std::uint64_t a_size) {
    Ledger ledger;
    const Rational shrink = 1 - trace.epsilon;
    const Rational base = 2 * trace.k0;
    for (const auto& s : trace.steps) {
        ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceGrowth), count(s.aprime_a_size),
                                    Relation::LessEqual, rational_pow(shrink, s.index) * trace.k0 * a_size));
        // (4^i - 1)/3 grows fast, but 2 K0 >= 2 so the scale passes |A|
        // after at most log2|A| + 1 factors.
        std::uint64_t exponent = 0;
        for (std::uint64_t j = 0; j < s.index && exponent < (1ULL << 40); ++j) exponent = 4 * exponent + 1;
        Rational scale = 1;
        bool below_one = false;
        for (std::uint64_t j = 0; j < exponent && !below_one; ++j) {
            scale *= base;
            below_one = scale > a_size;
        }
        if (below_one) {
            ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceSizeBelowOne), count(s.aprime_size),
                                        Relation::GreaterEqual, count(1)));
        } else {
            ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceSize), count(s.aprime_size),
                                        Relation::GreaterEqual, count(a_size) / scale));
        }
    }
    ledger.push_back(make_entry(std::string(entry::kTerminationBound), count(trace.i0), Relation::LessEqual,
                                count(trace.i0_bound)));
    if (trace.k0 * shrink < 1) {
        ledger.push_back(make_entry(std::string(entry::kImmediateTermination), count(trace.i0), Relation::Equal,
                                    count(0)));
    }
    return ledger;
}

PropositionResult proposition_run(const GSet& a, const Rational& eps) {
    if (a.empty()) throw EmptySet("proposition_run requires a non-empty set");
    require_epsilon(eps);

    IterationTrace trace;
    trace.epsilon = eps;
    trace.k0 = ratio(product(a, a).size(), a.size());
    trace.i0_bound = ceil_log_steps(trace.k0, 1 - eps);

    Ledger ledger;
    GSet current = a;
    for (std::uint64_t i = 0;; ++i) {
        auto outcome = lemma_step(current, a, eps, i);
        ledger.insert(ledger.end(), outcome.ledger.begin(), outcome.ledger.end());
        TraceStep step;
        step.index = i;
        step.aprime_size = outcome.aprime_size;
        step.aprime_a_size = outcome.aprime_a_size;
        step.level_set_size = outcome.level_set.size();
        step.tau = outcome.tau;
        if (outcome.is_shrink()) {
            step.kind = StepCase::Shrink;
            step.witness = outcome.shrink().witness;
            trace.steps.push_back(step);
            if (i + 1 > trace.i0_bound) {
                throw InvariantViolation("proposition_run: shrink count exceeds the termination bound");
            }
            current = outcome.shrink().shrunk;
            continue;
        }
        step.kind = StepCase::Terminate;
        trace.steps.push_back(step);
        trace.i0 = i;

        auto bounds = trace_ledger(trace, a.size());
        enforce(bounds, "proposition_run");
        ledger.insert(ledger.end(), bounds.begin(), bounds.end());
        auto sym = outcome.terminate().sym;
        return PropositionResult{current, std::move(sym), std::move(trace), outcome.level_set, std::move(ledger)};
    }
}

Certificate theorem_main(const GSet& a, unsigned k, json instance) {
    if (k == 0) throw InvalidArgument("theorem_main requires k >= 1");
    if (a.empty()) throw EmptySet("theorem_main requires a non-empty set");

    const Rational eps = ratio(1, k + 1);
    auto run = proposition_run(a, eps);

    Certificate cert{std::move(instance), k,      eps, run.aprime, run.sym.members, std::move(run.trace),
                     std::move(run.ledger), false};

    const auto& s = cert.s;
    const auto& g = a.group();
    const auto s_inv = inverse_set(s);
    const std::uint64_t defect = set_difference(s, s_inv).size() + set_difference(s_inv, s).size();
    const auto aprime_a = product(cert.aprime, a);
    const std::uint64_t n_ap = cert.aprime.size();

    auto& ledger = cert.ledger;
    ledger.push_back(make_entry(std::string(entry::kIdentityInS), count(s.contains(g.identity()) ? 1 : 0),
                                Relation::Equal, count(1)));
    ledger.push_back(make_entry(std::string(entry::kSymmetryDefect), count(defect), Relation::Equal, count(0)));
    ledger.push_back(make_entry(std::string(entry::kSLowerBound), count(s.size()), Relation::GreaterEqual,
                                Rational(Integer(n_ap) * n_ap * n_ap, Integer(2) * aprime_a.size() * a.size())));

    // Sym_{1-eps}(A'A)^k within Sym_{1-k eps}(A'A) within A'A(A'A)^-1 within A^2 A^-2.
    const auto s_power = power(s, k);
    const auto wide_sym = sym_set(aprime_a, 1 - eps * k).members;
    ledger.push_back(make_entry(std::string(entry::kPowerOutsideSym),
                                count(set_difference(s_power, wide_sym).size()), Relation::Equal, count(0)));
    const auto square = product(a, a);
    const auto double_difference = product(square, inverse_set(square));
    ledger.push_back(make_entry(std::string(entry::kPowerEscapes), count(escapes(s_power, double_difference) ? 1 : 0),
                                Relation::Equal, count(0)));

    cert.verified = all_hold(ledger) && oracle_power_within_double_difference(s, k, a);
    return cert;
}

AlmostInvariantPair almost_invariant(const GSet& a, unsigned k, json instance) {
    AlmostInvariantPair out{theorem_main(a, k, std::move(instance)), GSet(a.group_ptr()), 0, GSet(a.group_ptr()), {},
                            {}, {}, false};
    out.s = out.certificate.s;

    std::vector<GSet> chain{a};
    for (unsigned j = 1; j <= k; ++j) chain.push_back(product(out.s, chain.back()));
    for (const auto& set : chain) out.chain.push_back(set.size());

    out.ratio = ratio(out.chain[1], out.chain[0]);
    for (unsigned l = 1; l < k; ++l) {
        const Rational r = ratio(out.chain[l + 1], out.chain[l]);
        if (r < out.ratio) {
            out.ratio = r;
            out.l = l;
        }
    }
    out.astar = chain[out.l];

    std::uint64_t drops = 0;
    for (unsigned j = 0; j < k; ++j) drops += out.chain[j + 1] < out.chain[j] ? 1 : 0;

    const auto square = product(a, a);
    const auto target = product(product(square, inverse_set(square)), a);
    out.ledger.push_back(make_entry("invariant.pigeonhole", rational_pow(out.ratio, k), Relation::LessEqual,
                                    ratio(out.chain[k], out.chain[0])));
    out.ledger.push_back(make_entry("invariant.chain_drops", count(drops), Relation::Equal, count(0)));
    out.ledger.push_back(make_entry("invariant.chain_outside_target",
                                    count(set_difference(chain[k], target).size()), Relation::Equal, count(0)));
    out.verified = out.certificate.verified && all_hold(out.ledger) && oracle_chain_within(out.s, k, a);
    return out;
}

}  // namespace symgrowth
