// Command-line front end: verification, invariants, classification, bounded
// enumeration, and catalog generation over the JSON wire format. All output
// is deterministic; machine-readable errors go to stderr. Exit codes: 0 on
// success, 1 when verification fails or a computation rejects the data, 2 on
// malformed input.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamfp/catalog.hpp"
#include "hamfp/checks.hpp"
#include "hamfp/classifier.hpp"
#include "hamfp/core.hpp"
#include "hamfp/invariants.hpp"

namespace {

using namespace hamfp;

int fail_exit(const Failure& f) {
    std::cerr << f.to_json().dump() << "\n";
    return f.code == Errc::malformed_input ? 2 : 1;
}

int diag_exit(const std::string& message, int code) {
    std::cerr << json{{"error", "cli"}, {"message", message}}.dump() << "\n";
    return code;
}

// Input is a file path, inline JSON (starts with '{'), or - / empty = stdin.
std::optional<std::string> read_input(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (arg.front() == '{') return arg;
    std::ifstream in(arg);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_report_table(const VerificationReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.passed && !c.witness.is_null()) std::cout << "  " << c.witness.dump();
        std::cout << "\n";
    }
    std::cout << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
}

int run_verify(const std::string& input, const std::string& format, bool rational_k) {
    auto text = read_input(input);
    if (!text) return diag_exit("cannot read input: " + input, 2);
    auto data = decode_text(*text);
    if (!data.ok()) return fail_exit(data.error());

    VerifyOptions opts;
    opts.require_integral_k = !rational_k;
    auto rep = verify_all(data.value(), opts);
    if (format == "table")
        print_report_table(rep);
    else
        std::cout << rep.to_json().dump() << "\n";
    return rep.overall ? 0 : 1;
}

int run_invariants(const std::string& input, const std::string& format) {
    auto text = read_input(input);
    if (!text) return diag_exit("cannot read input: " + input, 2);
    auto data = parse_data(*text);
    if (!data.ok()) return fail_exit(data.error());
    auto report = invariants_report(data.value());
    if (!report.ok()) return fail_exit(report.error());
    if (format == "table") {
        const json& j = report.value();
        std::cout << "ring: " << j["ring"]["presentation"].get<std::string>() << "\n"
                  << "a:    " << j["ring"]["a"].dump() << "\n"
                  << "c(M): " << j["chern"]["c"].dump() << "\n"
                  << "chern numbers: " << j["chern"]["numbers"].dump() << "\n"
                  << "localization checks: " << j["localization_checks"].get<std::string>()
                  << "\n";
    } else {
        std::cout << report.value().dump() << "\n";
    }
    return 0;
}

int run_classify(const std::string& input, const std::string& format) {
    auto text = read_input(input);
    if (!text) return diag_exit("cannot read input: " + input, 2);
    auto data = parse_data(*text);
    if (!data.ok()) return fail_exit(data.error());
    auto match = match_family(data.value());
    if (format == "table") {
        std::cout << "family: " << family_name(match.family);
        for (const auto& p : match.params) std::cout << " " << p.str();
        std::cout << "\n";
    } else {
        std::cout << match.to_json().dump() << "\n";
    }
    return 0;
}

int run_catalog(const std::string& family, const std::vector<std::string>& params) {
    std::vector<Int> ps;
    for (const auto& s : params) {
        try {
            ps.emplace_back(s);
        } catch (...) {
            return diag_exit("parameters must be integers: " + s, 2);
        }
        if (ps.back() < 1) return diag_exit("parameters must be >= 1", 2);
    }

    auto fam = family_from_name(family);
    if (!fam) return diag_exit("unknown family (use 1a, 1b, 2a, 2b): " + family, 2);
    switch (*fam) {
        case Family::f1a: {
            if (ps.empty()) ps = {1, 1, 1};
            if (ps.size() != 3) return diag_exit("family 1a takes parameters a,b,c", 2);
            std::cout << emit(make_cp3(ps[0], ps[1], ps[2])) << "\n";
            return 0;
        }
        case Family::f1b: {
            if (ps.empty()) ps = {1, 2};
            if (ps.size() != 2) return diag_exit("family 1b takes parameters a,b", 2);
            auto g = make_grass(ps[0], ps[1]);
            if (!g.ok()) {
                std::cerr << g.error().to_json().dump() << "\n";
                return 2;
            }
            std::cout << emit(g.value()) << "\n";
            return 0;
        }
        case Family::f2a:
        case Family::f2b: {
            if (!ps.empty()) return diag_exit("families 2a and 2b take no parameters", 2);
            std::cout << emit(*fam == Family::f2a ? make_v5() : make_v22()) << "\n";
            return 0;
        }
        default: return diag_exit("unknown family", 2);
    }
}

int run_enumerate(int max_gap, int graph, int jobs, bool histogram,
                  const std::vector<std::string>& disabled, const std::string& format) {
    EnumerateOptions opts;
    if (graph != 0) opts.graph_filter = GraphType(graph);
    opts.verify.disabled_checks = disabled;
    opts.jobs = jobs;
    auto result = enumerate_candidates(max_gap, opts);

    if (format == "table") {
        for (const auto& e : result.entries) {
            const auto& d = e.data;
            std::cout << family_name(e.family.family) << "  gaps=(" << d.gap(0).str() << ","
                      << d.gap(1).str() << "," << d.gap(2).str() << ")\n";
        }
        std::cout << "survivors=" << result.entries.size()
                  << " candidates=" << result.candidates << "\n";
        if (histogram)
            for (const auto& [name, count] : result.rejections)
                std::cout << "rejected_by " << name << " " << count << "\n";
    } else {
        for (const auto& e : result.entries) {
            json line{{"data", to_json(e.data)},
                      {"family", family_name(e.family.family)},
                      {"report", e.report.to_json()}};
            std::cout << line.dump() << "\n";
        }
        std::cout << result.summary_json(histogram).dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and classification for fixed-point data of Hamiltonian "
                 "circle actions (dimension 6, 4 fixed points)"};
    app.require_subcommand(1);

    std::string input, format = "json";
    bool rational_k = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "file path, inline JSON, or '-' for stdin");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* verify_cmd = app.add_subcommand("verify", "run all checks and print the report");
    add_io(verify_cmd);
    verify_cmd->add_flag("--rational-k", rational_k,
                         "accept a rational c1 proportionality constant");

    auto* invariants_cmd =
        app.add_subcommand("invariants", "ring presentation, Chern classes and numbers");
    add_io(invariants_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "match the data against the families");
    add_io(classify_cmd);

    std::string family;
    std::vector<std::string> params;
    auto* catalog_cmd = app.add_subcommand("catalog", "emit canonical family data");
    catalog_cmd->add_option("family", family, "one of 1a, 1b, 2a, 2b")->required();
    catalog_cmd->add_option("--params", params, "family parameters, e.g. --params 1,2,3")
        ->delimiter(',');

    int max_gap = 0, graph = 0, jobs = 1;
    bool histogram = false;
    std::vector<std::string> disabled;
    auto* enum_cmd = app.add_subcommand("enumerate", "bounded exhaustive search");
    enum_cmd->add_option("--max-gap", max_gap, "largest moment gap to search")
        ->required()
        ->check(CLI::PositiveNumber);
    enum_cmd->add_option("--graph-type", graph, "restrict to one multigraph type")
        ->check(CLI::Range(1, 3));
    enum_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    enum_cmd->add_flag("--histogram", histogram, "emit the rejection histogram");
    enum_cmd->add_option("--disable-check", disabled, "skip a named check (testing aid)")
        ->check(CLI::IsMember(hamfp::all_check_names()));
    enum_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    if (verify_cmd->parsed()) return run_verify(input, format, rational_k);
    if (invariants_cmd->parsed()) return run_invariants(input, format);
    if (classify_cmd->parsed()) return run_classify(input, format);
    if (catalog_cmd->parsed()) return run_catalog(family, params);
    if (enum_cmd->parsed()) return run_enumerate(max_gap, graph, jobs, histogram, disabled, format);
    return 2;
}
