#include "symgrowth/certificate_io.hpp"

#include <fstream>
#include <limits>

#include "symgrowth/error.hpp"

namespace symgrowth {

namespace {

std::string str(std::uint64_t n) { return std::to_string(n); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");
    return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
    const auto& v = field(obj, key);
    if (!v.is_string()) throw ParseError(std::string("certificate field '") + key + "' must be a string");
    return v.get<std::string>();
}

Rational rational_field(const json& obj, const char* key) {
    try {
        return parse_rational(string_field(obj, key));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("certificate field '") + key + "': " + e.what());
    }
}

std::uint64_t count_field(const json& obj, const char* key) {
    const Rational r = rational_field(obj, key);
    if (r < 0 || boost::multiprecision::denominator(r) != 1 ||
        r > Rational(std::numeric_limits<std::uint64_t>::max())) {
        throw ParseError(std::string("certificate field '") + key + "' must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(boost::multiprecision::numerator(r));
}

}  // namespace

json ledger_to_json(const Ledger& ledger) {
    json out = json::array();
    for (const auto& e : ledger) {
        out.push_back({{"name", e.name},
                       {"lhs", to_string(e.lhs)},
                       {"relation", std::string(relation_symbol(e.relation))},
                       {"rhs", to_string(e.rhs)},
                       {"holds", e.holds}});
    }
    return out;
}

Ledger ledger_from_json(const json& value) {
    if (!value.is_array()) throw ParseError("ledger must be an array");
    Ledger ledger;
    for (const auto& e : value) {
        const auto& holds = field(e, "holds");
        if (!holds.is_boolean()) throw ParseError("ledger 'holds' must be a boolean");
        ledger.push_back(LedgerEntry{string_field(e, "name"), rational_field(e, "lhs"),
                                     parse_relation(string_field(e, "relation")), rational_field(e, "rhs"),
                                     holds.get<bool>()});
    }
    return ledger;
}

json trace_to_json(const IterationTrace& trace, const Group& group) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"index", str(s.index)},
                         {"aprime_size", str(s.aprime_size)},
                         {"aprime_a_size", str(s.aprime_a_size)},
                         {"case", s.kind == StepCase::Shrink ? "shrink" : "terminate"},
                         {"witness", s.witness ? group.element_to_json(*s.witness) : json(nullptr)},
                         {"level_set_size", str(s.level_set_size)},
                         {"tau", to_string(s.tau)}});
    }
    return {{"epsilon", to_string(trace.epsilon)},
            {"k0", to_string(trace.k0)},
            {"i0", str(trace.i0)},
            {"i0_bound", str(trace.i0_bound)},
            {"steps", steps}};
}

IterationTrace trace_from_json(const json& value, const Group& group) {
    IterationTrace trace;
    trace.epsilon = rational_field(value, "epsilon");
    trace.k0 = rational_field(value, "k0");
    trace.i0 = count_field(value, "i0");
    trace.i0_bound = count_field(value, "i0_bound");
    const auto& steps = field(value, "steps");
    if (!steps.is_array()) throw ParseError("trace steps must be an array");
    for (const auto& s : steps) {
        TraceStep step;
        step.index = count_field(s, "index");
        step.aprime_size = count_field(s, "aprime_size");
        step.aprime_a_size = count_field(s, "aprime_a_size");
        const auto kind = string_field(s, "case");
        if (kind == "shrink") {
            step.kind = StepCase::Shrink;
        } else if (kind == "terminate") {
            step.kind = StepCase::Terminate;
        } else {
            throw ParseError("trace step case must be 'shrink' or 'terminate'");
        }
        const auto& w = field(s, "witness");
        if (!w.is_null()) step.witness = group.element_from_json(w);
        step.level_set_size = count_field(s, "level_set_size");
        step.tau = rational_field(s, "tau");
        trace.steps.push_back(step);
    }
    return trace;
}

json certificate_to_json(const Certificate& cert) {
    const auto& group = cert.s.group();
    return {{"instance", cert.instance},
            {"k", str(cert.k)},
            {"epsilon", to_string(cert.epsilon)},
            {"aprime", cert.aprime.to_json()},
            {"s", cert.s.to_json()},
            {"trace", trace_to_json(cert.trace, group)},
            {"ledger", ledger_to_json(cert.ledger)},
            {"verified", cert.verified},
            {"metadata", {{"comparison_bound", kComparisonBound}}}};
}

Certificate certificate_from_json(const json& value, GroupPtr group) {
    if (!value.is_object()) throw ParseError("certificate must be a JSON object");
    json instance = value.contains("instance") ? value.at("instance") : json(nullptr);
    const auto k = count_field(value, "k");
    if (k > std::numeric_limits<unsigned>::max()) throw ParseError("certificate k out of range");
    const Rational epsilon = rational_field(value, "epsilon");
    try {
        auto aprime = GSet::from_json(group, field(value, "aprime"));
        auto s = GSet::from_json(group, field(value, "s"));
        auto trace = trace_from_json(field(value, "trace"), *group);
        auto ledger = ledger_from_json(field(value, "ledger"));
        const auto& verified = field(value, "verified");
        if (!verified.is_boolean()) throw ParseError("certificate 'verified' must be a boolean");
        return Certificate{std::move(instance), static_cast<unsigned>(k), epsilon,       std::move(aprime),
                           std::move(s),        std::move(trace),        std::move(ledger), verified.get<bool>()};
    } catch (const InvalidElement& e) {
        throw ParseError(std::string("certificate element: ") + e.what());
    }
}

std::string canonical_dump(const json& value) { return value.dump(2) + "\n"; }

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("io_error", "cannot open " + tmp.string() + " for writing");
        out << contents;
        if (!out.flush()) throw Error("io_error", "failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("io_error", "cannot move output into place at " + path.string() + ": " + ec.message());
}

void emit_certificate(const Certificate& cert, const std::filesystem::path& path) {
    write_file_atomically(path, canonical_dump(certificate_to_json(cert)));
}

}  // namespace symgrowth
