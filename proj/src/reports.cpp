#include "plbranch/reports.hpp"

#include <sstream>

#include "plbranch/parser.hpp"

namespace plbranch {

namespace {

using nlohmann::json;

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

mpz_class mpz_of(const json& j) { return mpz_class(j.get<std::string>(), 10); }

Rational rational_of(const json& j) {
    Rational q(j.get<std::string>());
    q.canonicalize();
    return q;
}

json opt_count(const std::optional<unsigned long>& v) {
    return v ? json(std::to_string(*v)) : json("inf");
}

std::optional<unsigned long> opt_count_of(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "inf") return std::nullopt;
    return std::stoul(s);
}

json signed_str(long long v) { return json(std::to_string(v)); }

long long signed_of(const json& j) { return std::stoll(j.get<std::string>()); }

std::string exponent_list(const std::vector<unsigned long>& beta) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) os << ",";
        os << beta[i];
    }
    os << ")";
    return os.str();
}

json stage_to_json(const ResolutionStage& stage) {
    return json{{"exponents", stage.exponents.beta},
                {"multiplicity", stage.multiplicity},
                {"n", stage.n},
                {"p1", stage.p1},
                {"index", stage.curve_index},
                {"nu1", stage.nu1},
                {"nu2", stage.nu2},
                {"contribution", str(stage.contribution)}};
}

ResolutionStage stage_from_json(const json& j) {
    ResolutionStage stage;
    stage.exponents = validate_exponents(j.at("exponents").get<std::vector<unsigned long>>());
    stage.multiplicity = j.at("multiplicity").get<unsigned long>();
    stage.n = j.at("n").get<unsigned long>();
    stage.p1 = j.at("p1").get<unsigned long>();
    stage.curve_index = j.at("index").get<unsigned long>();
    stage.nu1 = j.at("nu1").get<unsigned long>();
    stage.nu2 = j.at("nu2").get<unsigned long>();
    stage.contribution = mpz_of(j.at("contribution"));
    return stage;
}

json witness_to_json(const ScanWitness& w) {
    return json{{"exponents", w.beta}, {"slack", str(w.slack)}};
}

ScanWitness witness_from_json(const json& j) {
    return ScanWitness{j.at("exponents").get<std::vector<unsigned long>>(), mpz_of(j.at("slack"))};
}

}  // namespace

TopoReport make_topo_report(const std::vector<unsigned long>& exponents) {
    TopoReport report;
    report.exponents = exponents;
    report.chain = resolution_chain(validate_exponents(exponents));
    tau_min(validate_exponents(exponents));  // asserts the closed form agrees
    report.dg = dg_bound(report.chain.mu);
    report.dimca_greuel_ok = 4 * report.chain.tau_min > 3 * report.chain.mu;
    return report;
}

json to_json(const TopoReport& report) {
    json stages = json::array();
    for (const auto& stage : report.chain.stages) stages.push_back(stage_to_json(stage));
    return json{{"schema_version", kSchemaVersion},
                {"command", "topo"},
                {"exponents", report.exponents},
                {"stages", std::move(stages)},
                {"mu", str(report.chain.mu)},
                {"tau_min", str(report.chain.tau_min)},
                {"dg_bound", str(report.dg)},
                {"dimca_greuel_holds", report.dimca_greuel_ok}};
}

TopoReport topo_from_json(const json& j) {
    TopoReport report;
    report.exponents = j.at("exponents").get<std::vector<unsigned long>>();
    for (const auto& stage : j.at("stages")) report.chain.stages.push_back(stage_from_json(stage));
    report.chain.mu = mpz_of(j.at("mu"));
    report.chain.tau_min = mpz_of(j.at("tau_min"));
    report.dg = mpz_of(j.at("dg_bound"));
    report.dimca_greuel_ok = j.at("dimca_greuel_holds").get<bool>();
    return report;
}

std::string to_text(const TopoReport& report) {
    std::ostringstream os;
    os << "class " << exponent_list(report.exponents) << "\n";
    os << "stage  exponents            mult  n    p1   i    nu1  nu2  contribution\n";
    std::size_t k = 1;
    for (const auto& stage : report.chain.stages) {
        std::string exps = exponent_list(stage.exponents.beta);
        os << k++ << "      " << exps << std::string(exps.size() < 21 ? 21 - exps.size() : 1, ' ');
        for (unsigned long v : {stage.multiplicity, stage.n, stage.p1, stage.curve_index, stage.nu1,
                                stage.nu2}) {
            std::string s = std::to_string(v);
            os << s << std::string(s.size() < 5 ? 5 - s.size() : 1, ' ');
        }
        os << stage.contribution.get_str() << "\n";
    }
    os << "mu = " << report.chain.mu.get_str() << "\n";
    os << "tau_min = " << report.chain.tau_min.get_str() << "\n";
    os << "dg_bound = " << report.dg.get_str() << "\n";
    os << "4*tau_min > 3*mu: " << mpz_class(4 * report.chain.tau_min).get_str() << " > "
       << mpz_class(3 * report.chain.mu).get_str() << " "
       << (report.dimca_greuel_ok ? "OK" : "VIOLATED") << "\n";
    return os.str();
}

json to_json(const VerifyReport& report) {
    const InvariantReport& inv = report.invariants;
    json diagnostics{{"gcd_b1_fy", to_string(inv.diagnostics.gcd_b1_fy)},
                     {"gcd_b2_fy", to_string(inv.diagnostics.gcd_b2_fy)},
                     {"gcd_b1_g1", to_string(inv.diagnostics.gcd_b1_g1)},
                     {"gcd_b2_g2", to_string(inv.diagnostics.gcd_b2_g2)}};
    return json{{"schema_version", kSchemaVersion},
                {"command", "verify"},
                {"saito",
                 {{"is_basis", report.check.is_basis},
                  {"divisible", report.check.divisible},
                  {"unit", to_string(report.check.unit)},
                  {"unit_at_origin", str(report.check.unit_at_origin)}}},
                {"nu", inv.nu},
                {"nu1", inv.nu1},
                {"nu2", inv.nu2},
                {"good_basis", inv.good_basis},
                {"g1", to_string(inv.g1)},
                {"g2", to_string(inv.g2)},
                {"mu", std::to_string(inv.mu)},
                {"tau", std::to_string(inv.tau)},
                {"i1", opt_count(inv.i1)},
                {"i2", opt_count(inv.i2)},
                {"curve_index", opt_count(inv.curve_index)},
                {"curve_index_certified", inv.curve_index_certified},
                {"mu_tilde", std::to_string(inv.mu_tilde)},
                {"tau_tilde", std::to_string(inv.tau_tilde)},
                {"lhs", signed_str(inv.lhs)},
                {"igg", std::to_string(inv.igg)},
                {"rhs", inv.rhs ? json(std::to_string(*inv.rhs)) : json("inf")},
                {"formula_holds", inv.formula_holds},
                {"diagnostics", std::move(diagnostics)}};
}

VerifyReport verify_from_json(const json& j) {
    VerifyReport report;
    const json& saito = j.at("saito");
    report.check.is_basis = saito.at("is_basis").get<bool>();
    report.check.divisible = saito.at("divisible").get<bool>();
    report.check.unit = parse_poly(saito.at("unit").get<std::string>());
    report.check.unit_at_origin = rational_of(saito.at("unit_at_origin"));
    InvariantReport& inv = report.invariants;
    inv.nu = j.at("nu").get<std::uint32_t>();
    inv.nu1 = j.at("nu1").get<std::uint32_t>();
    inv.nu2 = j.at("nu2").get<std::uint32_t>();
    inv.good_basis = j.at("good_basis").get<bool>();
    inv.g1 = parse_poly(j.at("g1").get<std::string>());
    inv.g2 = parse_poly(j.at("g2").get<std::string>());
    inv.mu = std::stoul(j.at("mu").get<std::string>());
    inv.tau = std::stoul(j.at("tau").get<std::string>());
    inv.i1 = opt_count_of(j.at("i1"));
    inv.i2 = opt_count_of(j.at("i2"));
    inv.curve_index = opt_count_of(j.at("curve_index"));
    inv.curve_index_certified = j.at("curve_index_certified").get<bool>();
    inv.mu_tilde = std::stoul(j.at("mu_tilde").get<std::string>());
    inv.tau_tilde = std::stoul(j.at("tau_tilde").get<std::string>());
    inv.lhs = signed_of(j.at("lhs"));
    inv.igg = std::stoul(j.at("igg").get<std::string>());
    if (j.at("rhs").get<std::string>() == "inf") {
        inv.rhs = std::nullopt;
    } else {
        inv.rhs = signed_of(j.at("rhs"));
    }
    inv.formula_holds = j.at("formula_holds").get<bool>();
    const json& diagnostics = j.at("diagnostics");
    inv.diagnostics.gcd_b1_fy = parse_poly(diagnostics.at("gcd_b1_fy").get<std::string>());
    inv.diagnostics.gcd_b2_fy = parse_poly(diagnostics.at("gcd_b2_fy").get<std::string>());
    inv.diagnostics.gcd_b1_g1 = parse_poly(diagnostics.at("gcd_b1_g1").get<std::string>());
    inv.diagnostics.gcd_b2_g2 = parse_poly(diagnostics.at("gcd_b2_g2").get<std::string>());
    return report;
}

namespace {

std::string opt_text(const std::optional<unsigned long>& v) {
    return v ? std::to_string(*v) : "inf";
}

}  // namespace

std::string to_text(const VerifyReport& report) {
    const InvariantReport& inv = report.invariants;
    std::ostringstream os;
    os << "saito basis: " << (report.check.is_basis ? "yes" : "no")
       << "; unit u = " << report.check.unit << "; u(0,0) = " << report.check.unit_at_origin
       << "\n";
    if (!report.check.is_basis) return os.str();
    os << "nu = " << inv.nu << ", nu1 = " << inv.nu1 << ", nu2 = " << inv.nu2 << "\n";
    os << "good basis: " << (inv.good_basis ? "yes" : "no") << "\n";
    os << "g1 = " << inv.g1 << "\n";
    os << "g2 = " << inv.g2 << "\n";
    os << "mu = " << inv.mu << ", tau = " << inv.tau << ", I(g1,g2) = " << inv.igg << "\n";
    os << "indices: i1 = " << opt_text(inv.i1) << ", i2 = " << opt_text(inv.i2)
       << ", curve index " << (inv.curve_index_certified ? "= " : "<= (candidate bound) ")
       << opt_text(inv.curve_index) << "\n";
    os << "strict transform: mu~ = " << inv.mu_tilde << ", tau~ = " << inv.tau_tilde << "\n";
    os << "mu - tau = " << inv.lhs << " (= I(g1,g2): " << (static_cast<long long>(inv.igg) == inv.lhs ? "yes" : "NO")
       << ")\n";
    os << "formula: " << inv.lhs << (inv.formula_holds ? " = " : " != ")
       << (inv.rhs ? std::to_string(*inv.rhs) : "inf") << " "
       << (inv.formula_holds ? "HOLDS" : "FAILS");
    if (!inv.formula_holds && !inv.good_basis) os << " (expected: no good basis)";
    os << "\n";
    return os.str();
}

json to_json(const ScanSummary& report) {
    json violations = json::array();
    for (const auto& violation : report.scan.violations) {
        violations.push_back(json{{"exponents", violation.beta}, {"check", violation.check}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"command", "scan"},
                {"max_beta0", report.options.max_beta0},
                {"max_beta1", report.options.max_beta1},
                {"max_pairs", report.options.max_pairs},
                {"jobs", report.options.jobs},
                {"class_count", report.scan.class_count},
                {"violations", std::move(violations)},
                {"min_ratio_slack", witness_to_json(report.scan.min_ratio_slack)},
                {"min_bound_slack", witness_to_json(report.scan.min_bound_slack)},
                {"min_sum_slack", witness_to_json(report.scan.min_sum_slack)},
                {"sample_classes", report.scan.sample_classes}};
}

ScanSummary scan_from_json(const json& j) {
    ScanSummary report;
    report.options.max_beta0 = j.at("max_beta0").get<unsigned long>();
    report.options.max_beta1 = j.at("max_beta1").get<unsigned long>();
    report.options.max_pairs = j.at("max_pairs").get<unsigned long>();
    report.options.jobs = j.at("jobs").get<unsigned>();
    report.scan.class_count = j.at("class_count").get<unsigned long>();
    for (const auto& violation : j.at("violations")) {
        report.scan.violations.push_back(ScanViolation{
            violation.at("exponents").get<std::vector<unsigned long>>(),
            violation.at("check").get<std::string>()});
    }
    report.scan.min_ratio_slack = witness_from_json(j.at("min_ratio_slack"));
    report.scan.min_bound_slack = witness_from_json(j.at("min_bound_slack"));
    report.scan.min_sum_slack = witness_from_json(j.at("min_sum_slack"));
    report.scan.sample_classes =
        j.at("sample_classes").get<std::vector<std::vector<unsigned long>>>();
    return report;
}

std::string to_text(const ScanSummary& report) {
    std::ostringstream os;
    os << report.scan.class_count << " classes (beta0 <= " << report.options.max_beta0
       << ", beta1 <= " << report.options.max_beta1 << ", pairs <= " << report.options.max_pairs
       << "), " << report.scan.violations.size() << " violations\n";
    if (report.scan.class_count > 0 && report.scan.class_count <= 20) {
        os << "classes:";
        for (const auto& beta : report.scan.sample_classes) os << " " << exponent_list(beta);
        os << "\n";
    }
    for (const auto& violation : report.scan.violations) {
        os << "violation: " << exponent_list(violation.beta) << " fails " << violation.check
           << "\n";
    }
    if (report.scan.class_count > 0) {
        os << "min 4*tau_min - 3*mu = " << report.scan.min_ratio_slack.slack.get_str() << " at "
           << exponent_list(report.scan.min_ratio_slack.beta) << "\n";
        os << "min tau_min - dg_bound = " << report.scan.min_bound_slack.slack.get_str() << " at "
           << exponent_list(report.scan.min_bound_slack.beta) << "\n";
        os << "min slack over sum(m_i - 1) = " << report.scan.min_sum_slack.slack.get_str()
           << " at " << exponent_list(report.scan.min_sum_slack.beta) << "\n";
    }
    return os.str();
}

json to_json(const BoundReport& report) {
    return json{{"schema_version", kSchemaVersion},
                {"command", "bound"},
                {"mu", str(report.mu)},
                {"dg_bound", str(report.bound)}};
}

BoundReport bound_from_json(const json& j) {
    return BoundReport{mpz_of(j.at("mu")), mpz_of(j.at("dg_bound"))};
}

std::string to_text(const BoundReport& report) {
    std::ostringstream os;
    os << "dg_bound(" << report.mu.get_str() << ") = " << report.bound.get_str() << "\n";
    return os.str();
}

}  // namespace plbranch
