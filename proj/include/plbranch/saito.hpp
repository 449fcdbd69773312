#pragma once

#include <optional>

#include "plbranch/local_algebra.hpp"
#include "plbranch/poly.hpp"

namespace plbranch {

// The 1-form A dx + B dy; A and B must not both vanish.
struct OneForm {
    Poly A;
    Poly B;
};

// The pair fails the Saito criterion for f.
struct NotSaitoBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The wedge A*f_y - B*f_x is not a polynomial multiple of f.
struct NotInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Algebraic multiplicity min(ord A, ord B).
std::uint32_t form_order(const OneForm& w);

// Coefficient of w1 /\ w2 against dx /\ dy: A1*B2 - A2*B1.
Poly wedge_coefficient(const OneForm& w1, const OneForm& w2);

struct SaitoCheck {
    bool is_basis = false;  // divisible and the quotient is a unit
    bool divisible = false;
    Poly unit;  // quotient (A1*B2 - A2*B1)/f when divisible, else zero
    Rational unit_at_origin;

    friend bool operator==(const SaitoCheck&, const SaitoCheck&) = default;
};

// Saito criterion: {w1, w2} generates the module of 1-forms leaving f
// invariant iff w1 /\ w2 = u*f dx /\ dy with u a unit.
SaitoCheck check_saito_basis(const Poly& f, const OneForm& w1, const OneForm& w2);

// Quotient (A*f_y - B*f_x)/f; empty when f does not divide it within
// polynomial exactness.
std::optional<Poly> cofactor(const Poly& f, const OneForm& w);

// Vanishing order at the strict-transform point of the lowest homogeneous
// part of w restricted to the exceptional line; empty means dicritical
// (infinite). Requires tangent_line(f) to succeed.
std::optional<unsigned long> index(const Poly& f, const OneForm& w);

struct Diagnostics {
    Poly gcd_b1_fy, gcd_b2_fy;  // gcd(B_i, df/dy)
    Poly gcd_b1_g1, gcd_b2_g2;  // gcd(B_i, g_i)

    bool all_coprime() const;

    friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct InvariantReport {
    std::uint32_t nu = 0;         // multiplicity of the curve
    std::uint32_t nu1 = 0;        // multiplicity of w1
    std::uint32_t nu2 = 0;        // multiplicity of w2
    bool good_basis = false;      // nu1 + nu2 == nu
    Poly g1, g2;                  // cofactors
    unsigned long mu = 0;         // Milnor number
    unsigned long tau = 0;        // Tjurina number
    std::optional<unsigned long> i1, i2;          // per-form indices, empty = dicritical
    std::optional<unsigned long> curve_index;     // min(i1, i2)
    bool curve_index_certified = false;           // exact only for a good basis
    unsigned long mu_tilde = 0;   // Milnor number of the strict transform (0 when smooth)
    unsigned long tau_tilde = 0;  // Tjurina number of the strict transform
    long long lhs = 0;            // mu - tau
    unsigned long igg = 0;        // intersection multiplicity of the cofactors
    std::optional<long long> rhs;  // mu~ - tau~ + (nu1-1)(nu2-1) + curve_index - 1
    bool formula_holds = false;
    Diagnostics diagnostics;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Full invariant panel for a verified Saito basis of f. Throws
// NotSaitoBasisError when the criterion fails, NonIsolatedError /
// NotSingleLineError from the underlying engines.
InvariantReport verify_report(const Poly& f, const OneForm& w1, const OneForm& w2,
                              unsigned cap = kDefaultColengthCap);

}  // namespace plbranch
