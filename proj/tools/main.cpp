#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "plbranch/curve_file.hpp"
#include "plbranch/parser.hpp"
#include "plbranch/reports.hpp"

namespace {

using namespace plbranch;

// Exit codes: 0 success, 1 scan violation, 2 input error, 3 not a Saito
// basis, 4 non-isolated singularity (or colength cap exhausted).
enum ExitCode : int {
    kOk = 0,
    kScanViolation = 1,
    kInputError = 2,
    kNotSaitoBasis = 3,
    kNonIsolated = 4,
};

std::vector<unsigned long> parse_exponent_list(const std::string& arg) {
    std::vector<unsigned long> beta;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        std::size_t comma = arg.find(',', pos);
        std::string item = arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("exponents must be comma-separated naturals, got '" + arg +
                                        "'");
        }
        beta.push_back(std::stoul(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return beta;
}

Poly parse_named(const std::string& text, const std::string& name) {
    try {
        return parse_poly(text);
    } catch (const ParseError& e) {
        throw std::invalid_argument(name + ": " + e.what());
    }
}

int cmd_topo(const std::string& exponents_arg, bool json_out) {
    TopoReport report = make_topo_report(parse_exponent_list(exponents_arg));
    if (json_out) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return kOk;
}

int cmd_verify(const std::string& path, bool json_out, unsigned cap) {
    CurveFile file = load_curve_file(path);
    if (!file.has_basis()) {
        throw std::invalid_argument(path + ": verify needs omega1 and omega2");
    }
    Poly f = parse_named(file.f, "f");
    OneForm w1{parse_named(file.omega1->A, "omega1.A"), parse_named(file.omega1->B, "omega1.B")};
    OneForm w2{parse_named(file.omega2->A, "omega2.A"), parse_named(file.omega2->B, "omega2.B")};

    VerifyReport report;
    report.check = check_saito_basis(f, w1, w2);
    if (!report.check.is_basis) {
        if (json_out) {
            nlohmann::json j{{"schema_version", kSchemaVersion},
                             {"command", "verify"},
                             {"saito",
                              {{"is_basis", false},
                               {"divisible", report.check.divisible},
                               {"unit", to_string(report.check.unit)},
                               {"unit_at_origin", report.check.unit_at_origin.get_str()}}}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << to_text(report);
        }
        std::cerr << "plbranch: not a Saito basis (wedge "
                  << (report.check.divisible ? "quotient is not a unit" : "is not a multiple of f")
                  << ")\n";
        return kNotSaitoBasis;
    }
    report.invariants = verify_report(f, w1, w2, cap);
    if (json_out) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return kOk;
}

int cmd_scan(const ScanOptions& options, bool json_out) {
    auto start = std::chrono::steady_clock::now();
    ScanSummary summary{options, scan_classes(options)};
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (json_out) {
        nlohmann::json j = to_json(summary);
        j["elapsed_seconds"] = elapsed.count();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(summary);
        std::cout << "elapsed: " << elapsed.count() << " s\n";
    }
    return summary.scan.violations.empty() ? kOk : kScanViolation;
}

int cmd_bound(const std::string& mu_arg, bool json_out) {
    if (mu_arg.empty() || mu_arg.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bound: mu must be a natural number, got '" + mu_arg + "'");
    }
    BoundReport report{mpz_class(mu_arg, 10), 0};
    report.bound = dg_bound(report.mu);
    if (json_out) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << to_text(report);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of plane branch singularities"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand name too

    bool json_out = false;
    unsigned cap = kDefaultColengthCap;
    app.add_flag("--json", json_out, "emit machine-readable JSON");
    app.add_option("--colength-cap", cap, "truncation-degree cap for the colength engine")
        ->capture_default_str();

    std::string exponents_arg;
    CLI::App* topo = app.add_subcommand("topo", "resolution table and tau_min for a class");
    topo->add_option("exponents", exponents_arg, "characteristic exponents, e.g. 9,12,17")
        ->required();

    std::string curve_path;
    CLI::App* verify = app.add_subcommand("verify", "check a Saito basis and report invariants");
    verify->add_option("file", curve_path, "curve file")->required()->check(CLI::ExistingFile);

    ScanOptions scan_options;
    CLI::App* scan = app.add_subcommand("scan", "check the Tjurina bounds over a class range");
    scan->add_option("--max-beta0", scan_options.max_beta0, "largest multiplicity")->required();
    scan->add_option("--max-beta1", scan_options.max_beta1, "largest exponent")->required();
    scan->add_option("--max-pairs", scan_options.max_pairs, "maximum characteristic pairs")
        ->capture_default_str();
    scan->add_option("--jobs", scan_options.jobs, "parallel workers")->capture_default_str();

    std::string mu_arg;
    CLI::App* bound = app.add_subcommand("bound", "Tjurina lower bound from a Milnor number");
    bound->add_option("mu", mu_arg, "Milnor number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (topo->parsed()) return cmd_topo(exponents_arg, json_out);
        if (verify->parsed()) return cmd_verify(curve_path, json_out, cap);
        if (scan->parsed()) return cmd_scan(scan_options, json_out);
        return cmd_bound(mu_arg, json_out);
    } catch (const NotSaitoBasisError& e) {
        std::cerr << "plbranch: " << e.what() << "\n";
        return kNotSaitoBasis;
    } catch (const NotInvariantError& e) {
        // passed the wedge test, but a form does not leave the curve invariant
        std::cerr << "plbranch: " << e.what() << "\n";
        return kNotSaitoBasis;
    } catch (const NonIsolatedError& e) {
        std::cerr << "plbranch: " << e.what() << "\n";
        return kNonIsolated;
    } catch (const CapExceededError& e) {
        std::cerr << "plbranch: " << e.what() << " (raise --colength-cap)\n";
        return kNonIsolated;
    } catch (const std::exception& e) {
        std::cerr << "plbranch: " << e.what() << "\n";
        return kInputError;
    }
}
