#include "plbranch/saito.hpp"

#include <future>

namespace plbranch {

std::uint32_t form_order(const OneForm& w) {
    if (w.A.is_zero() && w.B.is_zero()) throw std::invalid_argument("form_order: zero form");
    std::uint32_t ord = UINT32_MAX;
    if (auto a = w.A.order()) ord = std::min(ord, *a);
    if (auto b = w.B.order()) ord = std::min(ord, *b);
    return ord;
}

Poly wedge_coefficient(const OneForm& w1, const OneForm& w2) {
    return w1.A * w2.B - w2.A * w1.B;
}

SaitoCheck check_saito_basis(const Poly& f, const OneForm& w1, const OneForm& w2) {
    if (f.is_zero()) throw std::invalid_argument("check_saito_basis: zero curve");
    SaitoCheck check;
    auto quotient = exact_divide(wedge_coefficient(w1, w2), f);
    check.divisible = quotient.has_value();
    check.unit = quotient.value_or(Poly{});
    check.unit_at_origin = check.unit.at_origin();
    check.is_basis = check.divisible && check.unit_at_origin != 0;
    return check;
}

std::optional<Poly> cofactor(const Poly& f, const OneForm& w) {
    if (f.is_zero()) throw std::invalid_argument("cofactor: zero curve");
    return exact_divide(w.A * partial(f, Var::y) - w.B * partial(f, Var::x), f);
}

std::optional<unsigned long> index(const Poly& f, const OneForm& w) {
    auto line = tangent_line(f);
    if (!line) throw NotSingleLineError("index: tangent cone is not a power of a single line");
    std::uint32_t k = form_order(w);
    UniPoly p = restrict_to_line(w.A, k) + restrict_to_line(w.B, k).times_var();
    return root_multiplicity(p, -line->epsilon);
}

bool Diagnostics::all_coprime() const {
    return gcd_b1_fy.is_constant() && gcd_b2_fy.is_constant() && gcd_b1_g1.is_constant() &&
           gcd_b2_g2.is_constant();
}

InvariantReport verify_report(const Poly& f, const OneForm& w1, const OneForm& w2, unsigned cap) {
    SaitoCheck check = check_saito_basis(f, w1, w2);
    if (!check.is_basis) {
        throw NotSaitoBasisError(check.divisible
                                     ? "verify_report: wedge quotient vanishes at the origin"
                                     : "verify_report: wedge coefficient is not a multiple of f");
    }

    if (!is_isolated(f)) throw NonIsolatedError("verify_report: non-isolated singularity");

    InvariantReport report;
    report.nu = f.order().value();
    report.nu1 = form_order(w1);
    report.nu2 = form_order(w2);
    report.good_basis = report.nu1 + report.nu2 == report.nu;

    auto g1 = cofactor(f, w1);
    auto g2 = cofactor(f, w2);
    if (!g1 || !g2) throw NotInvariantError("verify_report: cofactor is not polynomial");
    report.g1 = std::move(*g1);
    report.g2 = std::move(*g2);

    report.i1 = index(f, w1);
    report.i2 = index(f, w2);
    if (report.i1 && report.i2) {
        report.curve_index = std::min(*report.i1, *report.i2);
    } else if (report.i1) {
        report.curve_index = report.i1;
    } else {
        report.curve_index = report.i2;
    }
    report.curve_index_certified = report.good_basis;

    BlowupResult blowup = strict_transform(f);
    const bool smooth_transform = blowup.transform.order().value_or(0) <= 1;

    // The five colength computations are independent; run them concurrently.
    auto mu_task = std::async(std::launch::async, [&] { return milnor(f, cap); });
    auto tau_task = std::async(std::launch::async, [&] { return tjurina(f, cap); });
    auto igg_task = std::async(std::launch::async,
                               [&] { return intersection_multiplicity(report.g1, report.g2, cap); });
    std::future<unsigned long> mu_t_task, tau_t_task;
    if (!smooth_transform) {
        mu_t_task = std::async(std::launch::async, [&] { return milnor(blowup.transform, cap); });
        tau_t_task = std::async(std::launch::async, [&] { return tjurina(blowup.transform, cap); });
    }

    report.mu = mu_task.get();
    report.tau = tau_task.get();
    auto igg = igg_task.get();
    if (!igg) throw CapExceededError("verify_report: cofactor intersection is not finite");
    report.igg = *igg;
    report.mu_tilde = smooth_transform ? 0 : mu_t_task.get();
    report.tau_tilde = smooth_transform ? 0 : tau_t_task.get();

    report.lhs = static_cast<long long>(report.mu) - static_cast<long long>(report.tau);
    if (report.curve_index) {
        report.rhs = static_cast<long long>(report.mu_tilde) -
                     static_cast<long long>(report.tau_tilde) +
                     (static_cast<long long>(report.nu1) - 1) * (static_cast<long long>(report.nu2) - 1) +
                     static_cast<long long>(*report.curve_index) - 1;
    }
    report.formula_holds = report.rhs.has_value() && report.lhs == *report.rhs;

    Poly fy = partial(f, Var::y);
    report.diagnostics.gcd_b1_fy = gcd(w1.B, fy);
    report.diagnostics.gcd_b2_fy = gcd(w2.B, fy);
    report.diagnostics.gcd_b1_g1 = gcd(w1.B, report.g1);
    report.diagnostics.gcd_b2_g2 = gcd(w2.B, report.g2);
    return report;
}

}  // namespace plbranch
