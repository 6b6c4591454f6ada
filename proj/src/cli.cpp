#include "symgrowth/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "symgrowth/budget.hpp"
#include "symgrowth/certificate_io.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/instances.hpp"
#include "symgrowth/iteration.hpp"
#include "symgrowth/oracle.hpp"
#include "symgrowth/set_arith.hpp"
#include "symgrowth/symmetry.hpp"

namespace symgrowth {

namespace {

struct RunConfig {
    std::string instance_path;
    std::string certificate_path;
    std::string out_path;
    std::string eta = "1";
    std::string epsilon = "1/2";
    unsigned k = 1;
    std::optional<std::uint64_t> budget_pairs;
    unsigned symmetric_limit = kDefaultSymmetricLimit;
    bool trace = false;
    std::string sweep_param;
    std::string sweep_values;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        write_file_atomically(cfg.out_path, text);
    }
}

void log_line(std::ostream& err, const json& line) { err << line.dump() << '\n'; }

json stats_json(const DoublingStats& s) {
    return {{"doubling", to_string(s.doubling)},
            {"size", std::to_string(s.size)},
            {"square_size", std::to_string(s.square_size)},
            {"difference_size", std::to_string(s.difference_size)},
            {"double_difference_size", std::to_string(s.double_difference_size)}};
}

void log_trace(std::ostream& err, const IterationTrace& trace, const Group& g) {
    const auto steps = trace_to_json(trace, g).at("steps");
    for (const auto& step : steps) log_line(err, {{"level", "trace"}, {"step", step}});
}

std::vector<std::int64_t> parse_values(const std::string& text) {
    std::vector<std::int64_t> values;
    const auto range = text.find("..");
    try {
        if (range != std::string::npos) {
            const auto lo = std::stoll(text.substr(0, range));
            const auto hi = std::stoll(text.substr(range + 2));
            if (hi < lo || hi - lo > 100000) throw InvalidArgument("bad sweep range '" + text + "'");
            for (auto v = lo; v <= hi; ++v) values.push_back(v);
            return values;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
        throw InvalidArgument("sweep values must be 'lo..hi' or a comma list of integers, got '" + text + "'");
    }
    if (values.empty()) throw InvalidArgument("sweep values are empty");
    return values;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto a = generate(spec);
    emit(cfg, out, canonical_dump({{"instance", spec.to_json()}, {"stats", stats_json(doubling_stats(a))}}));
    return kExitOk;
}

int cmd_sym(const RunConfig& cfg, std::ostream& out) {
    const auto eta = parse_rational(cfg.eta);
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto sym = sym_set(generate(spec), eta);
    emit(cfg, out,
         canonical_dump({{"instance", spec.to_json()},
                         {"eta", to_string(sym.eta)},
                         {"base_size", std::to_string(sym.base.size())},
                         {"size", std::to_string(sym.members.size())},
                         {"members", sym.members.to_json()}}));
    return kExitOk;
}

int cmd_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto eps = parse_rational(cfg.epsilon);
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto a = generate(spec);
    const auto outcome = lemma_step(a, a, eps);
    const auto& g = a.group();
    json result = {{"instance", spec.to_json()},
                   {"epsilon", to_string(eps)},
                   {"case", outcome.is_shrink() ? "shrink" : "terminate"},
                   {"tau", to_string(outcome.tau)},
                   {"aprime_size", std::to_string(outcome.aprime_size)},
                   {"aprime_a_size", std::to_string(outcome.aprime_a_size)},
                   {"level_set", outcome.level_set.to_json()},
                   {"ledger", ledger_to_json(outcome.ledger)}};
    if (outcome.is_shrink()) {
        result["witness"] = g.element_to_json(outcome.shrink().witness);
        result["shrunk"] = outcome.shrink().shrunk.to_json();
        result["shrunk_product_size"] = std::to_string(outcome.shrink().shrunk_product_size);
    } else {
        result["eta"] = to_string(outcome.terminate().sym.eta);
        result["sym"] = outcome.terminate().sym.members.to_json();
    }
    if (cfg.trace) log_line(err, {{"level", "trace"}, {"case", result["case"]}, {"tau", result["tau"]}});
    emit(cfg, out, canonical_dump(result));
    return kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k == 0) throw InvalidArgument("--k must be at least 1");
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto a = generate(spec);
    const auto cert = theorem_main(a, cfg.k, spec.to_json());
    if (cfg.trace) log_trace(err, cert.trace, a.group());
    emit(cfg, out, canonical_dump(certificate_to_json(cert)));
    return cert.verified ? kExitOk : kExitVerificationFailed;
}

int cmd_invariant(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k == 0) throw InvalidArgument("--k must be at least 1");
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto a = generate(spec);
    const auto pair = almost_invariant(a, cfg.k, spec.to_json());
    if (cfg.trace) log_trace(err, pair.certificate.trace, a.group());
    json chain = json::array();
    for (const auto n : pair.chain) chain.push_back(std::to_string(n));
    emit(cfg, out,
         canonical_dump({{"instance", spec.to_json()},
                         {"k", std::to_string(cfg.k)},
                         {"s", pair.s.to_json()},
                         {"l", std::to_string(pair.l)},
                         {"astar", pair.astar.to_json()},
                         {"ratio", to_string(pair.ratio)},
                         {"chain", chain},
                         {"ledger", ledger_to_json(pair.ledger)},
                         {"certificate_verified", pair.certificate.verified},
                         {"verified", pair.verified}}));
    return pair.verified ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto rows = family_sweep(read_json_file(cfg.instance_path), {cfg.sweep_param, parse_values(cfg.sweep_values)},
                                   {cfg.symmetric_limit});
    const auto values = parse_values(cfg.sweep_values);
    std::ostringstream csv;
    csv << cfg.sweep_param << ",size,square_size,difference_size,double_difference_size,doubling\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = rows[i].stats;
        csv << values[i] << ',' << s.size << ',' << s.square_size << ',' << s.difference_size << ','
            << s.double_difference_size << ',' << to_string(s.doubling) << '\n';
    }
    emit(cfg, out, csv.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto spec = InstanceSpec::from_json(read_json_file(cfg.instance_path), {cfg.symmetric_limit});
    const auto a = generate(spec);
    const auto cert_json = read_json_file(cfg.certificate_path);
    const auto cert = certificate_from_json(cert_json, spec.group);
    auto report = verify_certificate(cert, a);
    if (!cert.instance.is_null()) {
        const bool same = cert.instance == spec.to_json();
        report.checks.push_back({"instance_matches", "true", same ? "true" : "false", same});
        report.overall = report.overall && same;
    }
    emit(cfg, out, canonical_dump(report.to_json()));
    return report.overall ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Symmetry sets, the shrink-or-terminate iteration and certified S^k within A^2A^-2"};
    app.require_subcommand(1);

    app.add_option("--budget-pairs", cfg.budget_pairs, "Maximum element pairs per operation")->check(CLI::PositiveNumber);
    app.add_option("--symmetric-limit", cfg.symmetric_limit, "Largest accepted degree for symmetric(n)")
        ->check(CLI::Range(1U, kMaxSymmetricDegree));
    app.add_flag("--trace", cfg.trace, "Log iteration steps to stderr as JSON lines");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--instance", cfg.instance_path, "Instance JSON file")->required();
        sub->add_option("--out", cfg.out_path, "Write the result here instead of stdout");
    };
    auto* stats = app.add_subcommand("stats", "Doubling statistics of the instance set");
    add_common(stats);
    auto* sym = app.add_subcommand("sym", "Symmetry set at threshold --eta");
    add_common(sym);
    sym->add_option("--eta", cfg.eta, "Threshold as an exact fraction, e.g. 4/5")->required();
    auto* lemma = app.add_subcommand("lemma", "One shrink-or-terminate step on (A, A)");
    add_common(lemma);
    lemma->add_option("--epsilon", cfg.epsilon, "Exact fraction in (0,1]")->required();
    auto* run = app.add_subcommand("run", "Certified symmetric neighbourhood S with S^k in A^2A^-2");
    add_common(run);
    run->add_option("--k", cfg.k, "Power k >= 1")->required();
    auto* invariant = app.add_subcommand("invariant", "Almost-invariant pair by pigeonhole on S^lA");
    add_common(invariant);
    invariant->add_option("--k", cfg.k, "Power k >= 1")->required();
    auto* sweep = app.add_subcommand("sweep", "Doubling statistics over a parameter grid (CSV)");
    add_common(sweep);
    sweep->add_option("--param", cfg.sweep_param, "Set key, or group.<key>")->required();
    sweep->add_option("--values", cfg.sweep_values, "lo..hi or comma list")->required();
    auto* verify = app.add_subcommand("verify", "Re-derive a certificate from scratch");
    add_common(verify);
    verify->add_option("--certificate", cfg.certificate_path, "Certificate JSON file")->required();

    std::vector<std::string> argv_storage{"symgrowth"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        log_line(err, {{"level", "error"}, {"kind", "invalid_argument"}, {"message", e.what()}});
        return kExitInvalidInput;
    }

    std::optional<ScopedPairBudget> scoped;
    if (cfg.budget_pairs) scoped.emplace(*cfg.budget_pairs);

    try {
        if (stats->parsed()) return cmd_stats(cfg, out);
        if (sym->parsed()) return cmd_sym(cfg, out);
        if (lemma->parsed()) return cmd_lemma(cfg, out, err);
        if (run->parsed()) return cmd_run(cfg, out, err);
        if (invariant->parsed()) return cmd_invariant(cfg, out, err);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const BudgetExceeded& e) {
        log_line(err, {{"level", "error"}, {"kind", e.kind()}, {"message", e.what()}});
        return kExitBudgetExceeded;
    } catch (const InvariantViolation& e) {
        log_line(err, {{"level", "error"}, {"kind", e.kind()}, {"message", e.what()}});
        return kExitVerificationFailed;
    } catch (const Error& e) {
        log_line(err, {{"level", "error"}, {"kind", e.kind()}, {"message", e.what()}});
        return kExitInvalidInput;
    } catch (const json::exception& e) {
        log_line(err, {{"level", "error"}, {"kind", "parse_error"}, {"message", e.what()}});
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace symgrowth
