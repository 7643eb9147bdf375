// Command-line front end for the right quantum algebra engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rqa/io.hpp"
#include "rqa/macmahon.hpp"
#include "rqa/oracle.hpp"
#include "rqa/phi.hpp"
#include "rqa/rewrite.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// RQA_VERBOSE=1 prints per-case lines in the check commands.
int verbosity() {
    const char* v = std::getenv("RQA_VERBOSE");
    return v ? std::atoi(v) : 0;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rqa::System parse_system(const std::string& s) {
    if (s == "s") return rqa::System::One;
    if (s == "sq") return rqa::System::Q;
    throw UsageError("unknown system '" + s + "' (expected s or sq)");
}

rqa::Strategy parse_strategy(const std::string& s) {
    if (s == "leftmost") return rqa::Strategy::leftmost();
    if (s == "rightmost") return rqa::Strategy::rightmost();
    if (s.rfind("random:", 0) == 0) {
        try {
            return rqa::Strategy::random(std::stoull(s.substr(7)));
        } catch (const std::exception&) {
        }
    }
    throw UsageError("unknown strategy '" + s + "' (expected leftmost, rightmost or random:<seed>)");
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("invalid rational '" + s + "'");
    q.canonicalize();
    if (q == 0) throw UsageError("q must be nonzero");
    return q;
}

rqa::ParseOptions alphabet(const std::optional<int>& r) { return rqa::ParseOptions{r}; }

void write_report(const std::string& path, const std::string& records) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write report file '" + path + "'");
    out << records;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms and identity checks in the right quantum algebra"};
    app.require_subcommand(1);

    std::optional<int> r_opt;
    std::string system_name = "s";

    // normalize
    auto* normalize = app.add_subcommand("normalize", "Reduce an expression to its normal form");
    std::string strategy_name = "leftmost";
    std::string normalize_expr;
    normalize->add_option("--system", system_name, "s or sq")->capture_default_str();
    normalize->add_option("--strategy", strategy_name, "leftmost, rightmost or random:<seed>")
        ->capture_default_str();
    normalize->add_option("--r", r_opt, "alphabet size for letter validation");
    normalize->add_option("expr", normalize_expr, "expression")->required();

    // trace
    auto* trace = app.add_subcommand("trace", "Print every rewrite step of a biword's reduction");
    std::string trace_biword;
    trace->add_option("--system", system_name, "s or sq")->capture_default_str();
    trace->add_option("--r", r_opt, "alphabet size for letter validation");
    trace->add_option("biword", trace_biword, "biword")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "Inversion statistics of a biword");
    std::string stats_biword;
    stats->add_option("--r", r_opt, "alphabet size for letter validation");
    stats->add_option("biword", stats_biword, "biword")->required();

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "Apply the weight map or its inverse");
    bool inverse = false;
    std::string phi_expr;
    phi_cmd->add_flag("--inverse", inverse, "apply the inverse map");
    phi_cmd->add_option("--r", r_opt, "alphabet size for letter validation");
    phi_cmd->add_option("expr", phi_expr, "expression")->required();

    // check
    auto* check = app.add_subcommand("check", "Verification runs");
    check->require_subcommand(1);
    std::optional<std::string> check_system;
    auto* ambiguities = check->add_subcommand("ambiguities", "All overlaps over {1,2,3}");
    ambiguities->add_option("--system", check_system, "s or sq (default: both)");

    int conf_r = 3;
    std::size_t conf_len = 6, conf_trials = 1000;
    std::uint64_t conf_seed = 1;
    auto* confluence = check->add_subcommand("confluence", "Random-position vs leftmost reduction");
    confluence->add_option("--r", conf_r)->required();
    confluence->add_option("--max-len", conf_len)->required();
    confluence->add_option("--trials", conf_trials)->required();
    confluence->add_option("--seed", conf_seed)->required();
    confluence->add_option("--system", system_name, "s or sq")->capture_default_str();

    int pr_r = 3;
    std::size_t pr_trials = 500, pr_len = 5;
    std::uint64_t pr_seed = 1;
    auto* principle = check->add_subcommand("principle", "Ideal membership under S vs weighted under Sq");
    principle->add_option("--r", pr_r)->required();
    principle->add_option("--trials", pr_trials)->required();
    principle->add_option("--seed", pr_seed)->required();
    principle->add_option("--max-len", pr_len, "maximum biword length")->capture_default_str();

    // qmm
    auto* qmm = app.add_subcommand("qmm", "Verify Ferm x Bos = 1 degree by degree");
    int qmm_r = 2;
    std::size_t qmm_degree = 4;
    std::string variant_name = "strong";
    std::string qmm_report;
    qmm->add_option("--r", qmm_r)->required();
    qmm->add_option("--max-degree", qmm_degree)->required();
    qmm->add_option("--variant", variant_name, "q, one or strong")->capture_default_str();
    qmm->add_option("--report", qmm_report, "write key<TAB>value records to this file");

    // basis
    auto* basis = app.add_subcommand("basis", "Quotient dimension vs irreducible count");
    int basis_r = 2;
    std::size_t basis_degree = 2;
    std::string q_text = "1";
    std::string basis_report;
    basis->add_option("--r", basis_r)->required();
    basis->add_option("--degree", basis_degree)->required();
    basis->add_option("--q", q_text, "rational q value p/s")->capture_default_str();
    basis->add_option("--report", basis_report, "write key<TAB>value records to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const int verbose = verbosity();
    try {
        if (*normalize) {
            const auto e = rqa::parse_expression(normalize_expr, alphabet(r_opt));
            const rqa::Reducer reducer(parse_system(system_name));
            const auto report = reducer.reduce(e, parse_strategy(strategy_name));
            std::cout << rqa::print_expression(report.normal_form) << '\n';
            std::cout << "steps\t" << report.rewrite_steps << '\n';
            if (verbose) std::cout << "max_intermediate_terms\t" << report.max_intermediate_terms << '\n';
            return kOk;
        }
        if (*trace) {
            const auto b = rqa::parse_biword(trace_biword, alphabet(r_opt));
            const rqa::Reducer reducer(parse_system(system_name), rqa::ReduceOptions{.record_trace = true});
            const auto report = reducer.reduce(rqa::Expression(b));
            for (const auto& event : *report.trace) std::cout << rqa::format_step(event) << '\n';
            std::cout << rqa::print_expression(report.normal_form) << '\n';
            return kOk;
        }
        if (*stats) {
            std::cout << rqa::format_stats(rqa::parse_biword(stats_biword, alphabet(r_opt)));
            return kOk;
        }
        if (*phi_cmd) {
            const auto e = rqa::parse_expression(phi_expr, alphabet(r_opt));
            std::cout << rqa::print_expression(inverse ? rqa::phi_inv(e) : rqa::phi(e)) << '\n';
            return kOk;
        }
        if (*ambiguities) {
            std::vector<rqa::System> systems;
            if (check_system) {
                systems.push_back(parse_system(*check_system));
            } else {
                systems = {rqa::System::One, rqa::System::Q};
            }
            bool all_ok = true;
            std::size_t cases = 0;
            for (auto sys : systems) {
                for (int a = 1; a <= 3; ++a)
                    for (int b = 1; b <= a; ++b)
                        for (int c = 1; c <= b; ++c) {
                            const bool ok = rqa::check_ambiguity(3, 2, 1, static_cast<rqa::Letter>(a),
                                                                 static_cast<rqa::Letter>(b),
                                                                 static_cast<rqa::Letter>(c), sys);
                            ++cases;
                            all_ok = all_ok && ok;
                            if (verbose || !ok)
                                std::cout << rqa::to_string(sys) << " 321/" << a << b << c << ' '
                                          << (ok ? "resolvable" : "NOT RESOLVABLE") << '\n';
                        }
            }
            std::cout << "ambiguities\t" << cases << "\nresult\t" << (all_ok ? "ok" : "FAILED") << '\n';
            return all_ok ? kOk : kVerificationFailed;
        }
        if (*confluence) {
            const auto result =
                rqa::check_confluence_fuzz(conf_r, conf_len, conf_trials, conf_seed, parse_system(system_name));
            for (const auto& b : result.counterexamples)
                std::cout << "counterexample\t" << rqa::print_biword(b) << '\n';
            std::cout << "trials\t" << result.trials << "\nresult\t" << (result.ok ? "ok" : "FAILED") << '\n';
            return result.ok ? kOk : kVerificationFailed;
        }
        if (*principle) {
            if (pr_r < 2 || pr_len < 2) throw UsageError("principle check needs --r >= 2 and --max-len >= 2");
            const auto result = rqa::check_principle_fuzz(pr_r, pr_len, pr_trials, pr_seed);
            for (const auto& e : result.counterexamples)
                std::cout << "counterexample\t" << rqa::print_expression(e) << '\n';
            std::cout << "members\t" << result.members << "\nnon_members\t" << result.non_members
                      << "\nresult\t" << (result.ok ? "ok" : "FAILED") << '\n';
            return result.ok ? kOk : kVerificationFailed;
        }
        if (*qmm) {
            if (qmm_r < 1) throw UsageError("--r must be at least 1");
            rqa::QmmReport report;
            if (variant_name == "strong") {
                report = rqa::strong_qmm_check(qmm_r, qmm_degree);
            } else if (variant_name == "one") {
                report = rqa::qmm_check(qmm_r, qmm_degree, rqa::Variant::One);
            } else if (variant_name == "q") {
                report = rqa::qmm_check(qmm_r, qmm_degree, rqa::Variant::Q);
            } else {
                throw UsageError("unknown variant '" + variant_name + "' (expected q, one or strong)");
            }
            std::cout << rqa::format_qmm_table(report);
            if (!qmm_report.empty()) write_report(qmm_report, rqa::format_qmm_records(report));
            return report.ok() ? kOk : kVerificationFailed;
        }
        if (*basis) {
            if (basis_r < 1) throw UsageError("--r must be at least 1");
            const auto report = rqa::check_basis_dimension(basis_r, basis_degree, parse_rational(q_text));
            std::cout << rqa::format_dimension_report(report);
            if (!basis_report.empty()) write_report(basis_report, rqa::format_dimension_records(report));
            return report.match ? kOk : kVerificationFailed;
        }
    } catch (const rqa::ParseError& e) {
        std::cerr << "parse error " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const rqa::ResourceExhausted& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}
