#include "symgrowth/oracle.hpp"

#include <algorithm>
#include <set>

#include "symgrowth/budget.hpp"
#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

using Elements = std::vector<Element>;

Elements plain(const GSet& s) { return Elements(s.begin(), s.end()); }

void normalise(Elements& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has(const Elements& sorted, Element x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

Elements naive_product(const Group& g, const Elements& a, const Elements& b) {
    charge_pairs(saturating_mul(a.size(), b.size()), "oracle_product");
    Elements out;
    out.reserve(a.size() * b.size());
    for (const auto x : a)
        for (const auto y : b) out.push_back(g.multiply(x, y));
    normalise(out);
    return out;
}

Elements naive_inverse(const Group& g, const Elements& a) {
    Elements out;
    for (const auto x : a) out.push_back(g.inverse(x));
    normalise(out);
    return out;
}

Elements naive_power(const Group& g, const Elements& a, unsigned k) {
    if (k == 0) return {g.identity()};
    Elements out = a;
    for (unsigned i = 1; i < k; ++i) out = naive_product(g, out, a);
    return out;
}

// |A cap xA| = #{a in A : x^-1 a in A}
std::uint64_t naive_overlap(const Group& g, const Elements& a, Element x) {
    const Element x_inv = g.inverse(x);
    std::uint64_t n = 0;
    for (const auto y : a) n += has(a, g.multiply(x_inv, y)) ? 1 : 0;
    return n;
}

std::map<Element, std::uint64_t> naive_conv(const Group& g, const Elements& a, const Elements& b) {
    charge_pairs(saturating_mul(a.size(), b.size()), "oracle_conv_table");
    std::map<Element, std::uint64_t> out;
    for (const auto x : a)
        for (const auto y : b) ++out[g.multiply(x, y)];
    return out;
}

std::uint64_t sum_of_squares(const std::map<Element, std::uint64_t>& f) {
    std::uint64_t s = 0;
    for (const auto& [x, v] : f) s += v * v;
    return s;
}

std::uint64_t inner(const std::map<Element, std::uint64_t>& f, const std::map<Element, std::uint64_t>& h) {
    std::uint64_t s = 0;
    for (const auto& [x, v] : f) {
        const auto it = h.find(x);
        if (it != h.end()) s += v * it->second;
    }
    return s;
}

bool naive_threshold(std::uint64_t count, const Rational& eta, std::uint64_t size) {
    return Rational(Integer(count)) >= eta * size;
}

Elements naive_sym(const Group& g, const Elements& a, const Rational& eta) {
    Elements out;
    for (const auto x : naive_product(g, a, naive_inverse(g, a))) {
        if (naive_threshold(naive_overlap(g, a, x), eta, a.size())) out.push_back(x);
    }
    return out;
}

std::uint64_t count_outside(const Elements& source, const Elements& target) {
    std::uint64_t n = 0;
    for (const auto x : source) n += has(target, x) ? 0 : 1;
    return n;
}

Rational q(std::uint64_t num, std::uint64_t den = 1) { return Rational(Integer(num), Integer(den)); }

std::string text(const Rational& r) { return to_string(r); }
std::string text(bool b) { return b ? "true" : "false"; }
std::string text(std::uint64_t n) { return std::to_string(n); }

std::string entry_text(const LedgerEntry& e) {
    return text(e.lhs) + " " + std::string(relation_symbol(e.relation)) + " " + text(e.rhs) +
           (e.holds ? " (holds)" : " (fails)");
}

struct Replay {
    Elements aprime;
    IterationTrace trace;
    Ledger ledger;
    bool ok = true;
    std::string failure;
};

// Re-runs the iteration with full scans and rebuilds the ledger entries the
// driver is expected to have recorded.
Replay replay_iteration(const GSet& a_set, const Rational& eps) {
    const auto& g = a_set.group();
    const Elements a = plain(a_set);
    const Elements a_inv = naive_inverse(g, a);
    const std::uint64_t n_a = a.size();

    Replay r;
    r.trace.epsilon = eps;
    r.trace.k0 = q(naive_product(g, a, a).size(), n_a);
    {
        // ceil(log K0 / -log(1 - eps)): least m with K0 (1 - eps)^m <= 1.
        std::uint64_t m = 0;
        Rational v = r.trace.k0;
        while (v > 1) {
            v *= (1 - eps);
            ++m;
        }
        r.trace.i0_bound = m;
    }

    Elements current = a;
    for (std::uint64_t i = 0;; ++i) {
        if (i > r.trace.i0_bound + 1) {
            r.ok = false;
            r.failure = "iteration did not terminate within its bound";
            return r;
        }
        const GSet current_set = GSet(a_set.group_ptr(), current);
        const auto lemma = oracle_lemma_step(current_set, a_set, eps);
        const std::uint64_t n_ap = current.size();
        const std::uint64_t n_apa = lemma.aprime_a_size;

        const auto mixed = sum_of_squares(naive_conv(g, a, current));
        const auto self = sum_of_squares(naive_conv(g, current, current));
        const auto swapped = inner(naive_conv(g, a_inv, a), naive_conv(g, current, naive_inverse(g, current)));
        const Rational ap4 = q(n_ap) * n_ap * n_ap * n_ap;
        r.ledger.push_back(make_entry(step_entry(i, entry::kEnergyDomination), q(mixed), Relation::GreaterEqual, q(self)));
        r.ledger.push_back(
            make_entry(step_entry(i, entry::kEnergyCauchySchwarz), q(self), Relation::GreaterEqual, ap4 / n_apa));
        r.ledger.push_back(make_entry(step_entry(i, entry::kEnergySymmetry), q(mixed), Relation::Equal, q(swapped)));
        r.ledger.push_back(make_entry(step_entry(i, entry::kLevelSetSplit),
                                      q(lemma.level_set.size()) * n_a * n_ap + lemma.tau * n_a * n_a,
                                      Relation::GreaterEqual, q(mixed)));
        r.ledger.push_back(make_entry(step_entry(i, entry::kLevelSetLowerBound), q(lemma.level_set.size()),
                                      Relation::GreaterEqual, q(n_ap) * n_ap * n_ap / (q(2) * n_apa * n_a)));

        TraceStep step;
        step.index = i;
        step.aprime_size = n_ap;
        step.aprime_a_size = n_apa;
        step.level_set_size = lemma.level_set.size();
        step.tau = lemma.tau;

        const Rational c4_bound = ap4 / (q(2) * n_apa * n_a * n_a);
        const Rational c3_bound = q(n_ap) * n_ap * n_ap / (q(2) * n_apa * n_a);
        if (lemma.chosen) {
            const Elements shrunk = plain(*lemma.shrunk);
            r.ledger.push_back(make_entry(step_entry(i, entry::kShrinkSize), q(shrunk.size()), Relation::GreaterEqual,
                                          c4_bound));
            r.ledger.push_back(make_entry(step_entry(i, entry::kShrinkGrowth), q(lemma.shrunk_product_size),
                                          Relation::LessEqual, (1 - eps) * n_apa));
            r.ledger.push_back(make_entry(step_entry(i, entry::kShrinkOutsideAprime), q(count_outside(shrunk, current)),
                                          Relation::Equal, q(0)));
            step.kind = StepCase::Shrink;
            step.witness = lemma.chosen;
            r.trace.steps.push_back(step);
            current = shrunk;
            continue;
        }

        const Rational eta = eps < 1 ? Rational(1 - eps) : q(1, n_apa);
        const Elements sym = naive_sym(g, naive_product(g, current, a), eta);
        r.ledger.push_back(make_entry(step_entry(i, entry::kTerminateSymSize), q(sym.size()), Relation::GreaterEqual,
                                      c3_bound));
        r.ledger.push_back(make_entry(step_entry(i, entry::kTerminateLevelSetOutsideSym),
                                      q(count_outside(lemma.level_set, sym)), Relation::Equal, q(0)));
        step.kind = StepCase::Terminate;
        r.trace.steps.push_back(step);
        r.trace.i0 = i;
        break;
    }

    const Rational shrink = 1 - eps;
    for (const auto& s : r.trace.steps) {
        Rational decay = 1;
        for (std::uint64_t j = 0; j < s.index; ++j) decay *= shrink;
        r.ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceGrowth), q(s.aprime_a_size),
                                      Relation::LessEqual, decay * r.trace.k0 * n_a));
        // (2 K0)^((4^i - 1)/3), stopping once it passes |A|
        std::uint64_t exponent = 0;
        for (std::uint64_t j = 0; j < s.index && exponent < (1ULL << 40); ++j) exponent = 4 * exponent + 1;
        Rational scale = 1;
        std::uint64_t used = 0;
        while (used < exponent && scale <= q(n_a)) {
            scale *= 2 * r.trace.k0;
            ++used;
        }
        if (scale > q(n_a)) {
            r.ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceSizeBelowOne), q(s.aprime_size),
                                          Relation::GreaterEqual, q(1)));
        } else {
            r.ledger.push_back(make_entry(trace_entry(s.index, entry::kTraceSize), q(s.aprime_size),
                                          Relation::GreaterEqual, q(n_a) / scale));
        }
    }
    r.ledger.push_back(make_entry(std::string(entry::kTerminationBound), q(r.trace.i0), Relation::LessEqual,
                                  q(r.trace.i0_bound)));
    if (r.trace.k0 * shrink < 1) {
        r.ledger.push_back(
            make_entry(std::string(entry::kImmediateTermination), q(r.trace.i0), Relation::Equal, q(0)));
    }
    r.aprime = current;
    return r;
}

}  // namespace

GSet oracle_product(const GSet& a, const GSet& b) {
    if (!a.group().same_as(b.group())) throw ContextMismatch("oracle_product: different groups");
    return GSet(a.group_ptr(), naive_product(a.group(), plain(a), plain(b)));
}

GSet oracle_inverse(const GSet& a) { return GSet(a.group_ptr(), naive_inverse(a.group(), plain(a))); }

GSet oracle_power(const GSet& a, unsigned k) { return GSet(a.group_ptr(), naive_power(a.group(), plain(a), k)); }

std::uint64_t oracle_conv_value(const GSet& a, const GSet& b, Element x) {
    const auto& g = a.group();
    std::uint64_t n = 0;
    for (const auto y : a)
        for (const auto z : b) n += g.multiply(y, z) == x ? 1 : 0;
    return n;
}

std::map<Element, std::uint64_t> oracle_conv_table(const GSet& a, const GSet& b) {
    return naive_conv(a.group(), plain(a), plain(b));
}

std::uint64_t oracle_quadruples(const GSet& b, const GSet& c, const GSet& d, const GSet& e) {
    const auto work = saturating_mul(saturating_mul(b.size(), c.size()), saturating_mul(d.size(), e.size()));
    charge_pairs(work, "oracle_quadruples");
    const auto& g = b.group();
    std::uint64_t n = 0;
    for (const auto x : b)
        for (const auto y : c) {
            const Element bc = g.multiply(x, y);
            for (const auto z : d)
                for (const auto w : e) n += g.multiply(z, w) == bc ? 1 : 0;
        }
    return n;
}

GSet oracle_sym_set(const GSet& a, const Rational& eta) {
    if (a.empty()) throw EmptySet("oracle_sym_set requires a non-empty set");
    if (eta <= 0 || eta > 1) throw InvalidArgument("oracle_sym_set threshold must lie in (0,1]");
    return GSet(a.group_ptr(), naive_sym(a.group(), plain(a), eta));
}

OracleLemma oracle_lemma_step(const GSet& aprime_set, const GSet& a_set, const Rational& eps) {
    const auto& g = a_set.group();
    const Elements aprime = plain(aprime_set);
    const Elements a = plain(a_set);
    if (aprime.empty() || a.empty()) throw EmptySet("oracle_lemma_step requires non-empty sets");

    OracleLemma out;
    out.aprime_a_size = naive_product(g, aprime, a).size();
    const std::uint64_t n_ap = aprime.size();
    out.tau = q(n_ap) * n_ap * n_ap * n_ap / (q(2) * out.aprime_a_size * a.size() * a.size());

    for (const auto t : naive_product(g, aprime, naive_inverse(g, aprime))) {
        if (q(naive_overlap(g, aprime, t)) >= out.tau) out.level_set.push_back(t);
    }
    const Rational limit = (1 - eps) * out.aprime_a_size;
    for (const auto t : out.level_set) {
        const Element t_inv = g.inverse(t);
        Elements overlap;
        for (const auto x : aprime) {
            if (has(aprime, g.multiply(t_inv, x))) overlap.push_back(x);
        }
        const auto grown = naive_product(g, overlap, a).size();
        if (q(grown) <= limit) {
            out.qualifying.push_back(t);
            if (!out.chosen) {
                out.chosen = t;
                out.shrunk = GSet(a_set.group_ptr(), overlap);
                out.shrunk_product_size = grown;
            }
        }
    }
    return out;
}

bool oracle_power_within_double_difference(const GSet& s, unsigned k, const GSet& a) {
    const auto& g = a.group();
    const Elements square = naive_product(g, plain(a), plain(a));
    const Elements target = naive_product(g, square, naive_inverse(g, square));
    return count_outside(naive_power(g, plain(s), k), target) == 0;
}

bool oracle_chain_within(const GSet& s, unsigned k, const GSet& a) {
    const auto& g = a.group();
    const Elements square = naive_product(g, plain(a), plain(a));
    const Elements target = naive_product(g, naive_product(g, square, naive_inverse(g, square)), plain(a));
    const Elements chain = naive_product(g, naive_power(g, plain(s), k), plain(a));
    return count_outside(chain, target) == 0;
}

json VerificationReport::to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    return {{"checks", checks_json}, {"overall", overall}};
}

VerificationReport verify_certificate(const Certificate& cert, const GSet& a) {
    VerificationReport report;
    auto check = [&report](std::string name, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        report.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
        return pass;
    };
    auto finish = [&report]() {
        report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                     [](const VerificationCheck& c) { return c.pass; });
        return report;
    };

    const auto& g = a.group();
    const bool same_group = g.same_as(cert.s.group()) && g.same_as(cert.aprime.group());
    if (!check("group_matches", "true", text(same_group)) || a.empty()) {
        check("instance_nonempty", "true", text(!a.empty()));
        return finish();
    }
    check("k_positive", "true", text(cert.k >= 1));
    if (cert.k == 0) return finish();
    check("epsilon", text(q(1, cert.k + 1)), text(cert.epsilon));

    const Elements aset = plain(a);
    const Elements aprime = plain(cert.aprime);
    const Elements s = plain(cert.s);
    check("aprime_nonempty", "true", text(!aprime.empty()));
    check("aprime_outside_a", "0", text(count_outside(aprime, aset)));
    check("identity_in_s", "true", text(has(s, g.identity())));
    check("s_symmetric", "true", text(naive_inverse(g, s) == s));

    const Elements square = naive_product(g, aset, aset);
    const Elements double_difference = naive_product(g, square, naive_inverse(g, square));
    check("power_outside_double_difference", "0",
          text(count_outside(naive_power(g, s, cert.k), double_difference)));

    const Rational eps = q(1, cert.k + 1);
    if (!aprime.empty()) {
        const Elements aprime_a = naive_product(g, aprime, aset);
        const Elements expected_s = naive_sym(g, aprime_a, 1 - eps);
        check("s_is_symmetry_set", text(std::uint64_t{expected_s.size()}), text(std::uint64_t{s.size()}));
        check("s_outside_symmetry_set", "0", text(count_outside(s, expected_s)));
        check("symmetry_set_outside_s", "0", text(count_outside(expected_s, s)));
        const Rational bound = q(aprime.size()) * aprime.size() * aprime.size() / (q(2) * aprime_a.size() * aset.size());
        check("s_lower_bound", "true", text(q(s.size()) >= bound));
    }

    const Replay replay = replay_iteration(a, eps);
    if (!check("replay_terminates", "true", text(replay.ok))) return finish();
    check("replay_aprime", "true", text(replay.aprime == aprime));
    check("trace_i0", text(replay.trace.i0), text(cert.trace.i0));
    check("trace_i0_bound", text(replay.trace.i0_bound), text(cert.trace.i0_bound));
    check("trace_k0", text(replay.trace.k0), text(cert.trace.k0));
    check("trace_epsilon", text(replay.trace.epsilon), text(cert.trace.epsilon));
    check("trace_steps", text(std::uint64_t{replay.trace.steps.size()}), text(std::uint64_t{cert.trace.steps.size()}));
    const std::size_t common = std::min(replay.trace.steps.size(), cert.trace.steps.size());
    for (std::size_t i = 0; i < common; ++i) {
        const auto& want = replay.trace.steps[i];
        const auto& got = cert.trace.steps[i];
        check("trace[" + std::to_string(i) + "]", "match", want == got ? "match" : "mismatch");
    }

    // Theorem-level entries, recomputed independently.
    Ledger expected = replay.ledger;
    {
        const Elements aprime_a = naive_product(g, replay.aprime, aset);
        const Elements sym = naive_sym(g, aprime_a, 1 - eps);
        const Elements s_inv = naive_inverse(g, sym);
        const std::uint64_t defect = count_outside(sym, s_inv) + count_outside(s_inv, sym);
        const Elements power = naive_power(g, sym, cert.k);
        const Elements wide = naive_sym(g, aprime_a, 1 - eps * cert.k);
        const std::uint64_t n_ap = replay.aprime.size();
        expected.push_back(make_entry(std::string(entry::kIdentityInS), q(has(sym, g.identity()) ? 1 : 0),
                                      Relation::Equal, q(1)));
        expected.push_back(make_entry(std::string(entry::kSymmetryDefect), q(defect), Relation::Equal, q(0)));
        expected.push_back(make_entry(std::string(entry::kSLowerBound), q(sym.size()), Relation::GreaterEqual,
                                      q(n_ap) * n_ap * n_ap / (q(2) * aprime_a.size() * aset.size())));
        expected.push_back(make_entry(std::string(entry::kPowerOutsideSym), q(count_outside(power, wide)),
                                      Relation::Equal, q(0)));
        expected.push_back(make_entry(std::string(entry::kPowerEscapes),
                                      q(count_outside(power, double_difference) > 0 ? 1 : 0), Relation::Equal, q(0)));
    }

    std::map<std::string, const LedgerEntry*> recorded;
    for (const auto& e : cert.ledger) {
        if (!recorded.emplace(e.name, &e).second) check("ledger_duplicate:" + e.name, "unique", "duplicate");
    }
    for (const auto& want : expected) {
        const auto it = recorded.find(want.name);
        check("ledger:" + want.name, entry_text(want), it == recorded.end() ? "missing" : entry_text(*it->second));
        if (it != recorded.end()) recorded.erase(it);
        if (!want.holds) check("ledger_holds:" + want.name, "holds", "fails");
    }
    for (const auto& [name, e] : recorded) check("ledger_unexpected:" + name, "absent", entry_text(*e));

    check("certificate_verified_flag", "true", text(cert.verified));
    return finish();
}

}  // namespace symgrowth
