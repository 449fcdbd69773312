#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plbranch {

struct InvalidExponents : std::runtime_error {
    InvalidExponents(const std::string& rule_text)
        : std::runtime_error("invalid characteristic exponents: " + rule_text), rule(rule_text) {}

    std::string rule;
};

// Characteristic exponents (beta_0, ..., beta_s) with their gcd chain
// e_0 = beta_0, e_i = gcd(e_{i-1}, beta_i). Valid sequences are strictly
// increasing, the chain strictly decreases to e_s = 1, and the smooth curve
// is encoded as (1).
struct CharExponents {
    std::vector<unsigned long> beta;
    std::vector<unsigned long> gcd_chain;

    unsigned long multiplicity() const { return beta.front(); }
    bool smooth() const { return beta.front() == 1; }

    friend bool operator==(const CharExponents&, const CharExponents&) = default;
};

CharExponents validate_exponents(const std::vector<unsigned long>& beta);

// Characteristic exponents of the strict transform under one blow-up.
// Requires a singular class (beta_0 >= 2).
CharExponents blowup_exponents(const CharExponents& c);

// Table value p_1 for a singular stage with exponents starting
// (beta0, beta1); n = ceil(beta1/(beta1-beta0)). The n = 2 row takes
// precedence over the parity rows.
unsigned long p1(unsigned long beta0, unsigned long beta1);

// Index contribution [beta0/2] + 1 - p1(beta0, beta1); always >= 1.
unsigned long stage_index(unsigned long beta0, unsigned long beta1);

struct ResolutionStage {
    CharExponents exponents;
    unsigned long multiplicity = 0;  // beta_0 of the stage
    unsigned long n = 0;             // ceil(beta1/(beta1-beta0))
    unsigned long p1 = 0;
    unsigned long curve_index = 0;  // [beta0/2] + 1 - p1
    unsigned long nu1 = 0;          // [beta0/2]
    unsigned long nu2 = 0;          // beta0 - [beta0/2]
    mpz_class contribution;          // (nu1-1)(nu2-1) + curve_index - 1

    friend bool operator==(const ResolutionStage&, const ResolutionStage&) = default;
};

struct ResolutionChain {
    std::vector<ResolutionStage> stages;  // stages with multiplicity >= 2
    mpz_class mu;                         // sum of m(m-1) over stages
    mpz_class tau_min;                    // mu - sum of contributions

    friend bool operator==(const ResolutionChain&, const ResolutionChain&) = default;
};

// Iterates blowup_exponents until the class is smooth. Requires beta_0 >= 2.
ResolutionChain resolution_chain(const CharExponents& c);

// Sum of m(m-1) over a multiplicity sequence (entries >= 2).
mpz_class milnor_from_sequence(std::span<const unsigned long> seq);

// Independent route to the Milnor number: the conductor of the branch
// semigroup, sum (e_{i-1} - e_i)*beta_i - beta_0 + 1.
mpz_class conductor_crosscheck(const CharExponents& c);

// Minimal Tjurina number of the class, evaluated both in closed form over the
// multiplicity sequence and recursively through the chain; the two routes
// must agree.
mpz_class tau_min(const CharExponents& c);

// Least integer t with 8t - 6mu + 1 > 0 and (8t - 6mu + 1)^2 >= 1 + 4mu: the
// integer ceiling of 3mu/4 + (sqrt(1+4mu) - 1)/8.
mpz_class dg_bound(const mpz_class& mu);

struct ScanOptions {
    unsigned long max_beta0 = 2;
    unsigned long max_beta1 = 2;
    unsigned long max_pairs = 2;  // maximum number of exponents after beta_0
    unsigned jobs = 1;

    friend bool operator==(const ScanOptions&, const ScanOptions&) = default;
};

struct ScanViolation {
    std::vector<unsigned long> beta;
    std::string check;

    friend bool operator==(const ScanViolation&, const ScanViolation&) = default;
};

struct ScanWitness {
    std::vector<unsigned long> beta;
    mpz_class slack;

    friend bool operator==(const ScanWitness&, const ScanWitness&) = default;
};

struct ScanReport {
    unsigned long class_count = 0;
    std::vector<ScanViolation> violations;
    ScanWitness min_ratio_slack;  // 4*tau_min - 3*mu
    ScanWitness min_bound_slack;  // tau_min - dg_bound(mu)
    ScanWitness min_sum_slack;    // 4*tau_min - 3*mu - sum(m_i - 1)
    // Up to the first 64 classes in enumeration order, for display.
    std::vector<std::vector<unsigned long>> sample_classes;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Enumerates every valid class within the bounds and checks, per class:
//   (1) 4*tau_min > 3*mu
//   (2) tau_min >= dg_bound(mu)
//   (3) 4*tau_min - 3*mu >= sum (m_i - 1)
//   (4) 4*tau_min - 3*mu == sum (m_i + delta_i + 4*(p1_i - 1)),
//       delta_i = 0 for even m_i and 3 for odd m_i.
// Violations are collected in the report. Bounds must be >= 2.
ScanReport scan_classes(const ScanOptions& options);

}  // namespace plbranch
