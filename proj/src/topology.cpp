#include "plbranch/topology.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace plbranch {

CharExponents validate_exponents(const std::vector<unsigned long>& beta) {
    if (beta.empty()) throw InvalidExponents("empty exponent list");
    if (beta.front() < 1) throw InvalidExponents("beta_0 must be at least 1");
    CharExponents c;
    c.beta = beta;
    c.gcd_chain.reserve(beta.size());
    c.gcd_chain.push_back(beta.front());
    for (std::size_t i = 1; i < beta.size(); ++i) {
        if (beta[i] <= beta[i - 1]) throw InvalidExponents("exponents not strictly increasing");
        unsigned long e = std::gcd(c.gcd_chain.back(), beta[i]);
        if (e >= c.gcd_chain.back()) throw InvalidExponents("gcd chain not strictly decreasing");
        c.gcd_chain.push_back(e);
    }
    if (c.gcd_chain.back() != 1) throw InvalidExponents("gcd chain does not end at 1");
    return c;
}

CharExponents blowup_exponents(const CharExponents& c) {
    if (c.smooth()) throw std::invalid_argument("blowup_exponents: class is already smooth");
    const auto& b = c.beta;
    unsigned long b0 = b[0], b1 = b[1];
    unsigned long r = b1 - b0;
    std::vector<unsigned long> next;
    if (b1 > 2 * b0) {
        next.push_back(b0);
        for (std::size_t i = 1; i < b.size(); ++i) next.push_back(b[i] - b0);
    } else if (b0 % r != 0) {
        next.push_back(r);
        next.push_back(b0);
        for (std::size_t i = 2; i < b.size(); ++i) next.push_back(b[i] - b1 + b0);
    } else {
        next.push_back(r);
        for (std::size_t i = 2; i < b.size(); ++i) next.push_back(b[i] - b1 + b0);
    }
    return validate_exponents(next);
}

unsigned long p1(unsigned long beta0, unsigned long beta1) {
    if (beta0 < 2 || beta1 <= beta0) throw std::invalid_argument("p1: need 2 <= beta0 < beta1");
    unsigned long r = beta1 - beta0;
    unsigned long n = (beta1 + r - 1) / r;  // ceil(beta1/r), n >= 2
    const bool beta0_even = beta0 % 2 == 0;
    const bool beta1_even = beta1 % 2 == 0;
    if (n == 2) return beta0_even ? 1 : 0;
    if (beta0_even) {
        if (beta1_even) return 1;
        return n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    }
    if (!beta1_even) return 1;
    return n % 2 == 1 ? (n - 3) / 2 : (n - 2) / 2;
}

unsigned long stage_index(unsigned long beta0, unsigned long beta1) {
    unsigned long half = beta0 / 2;
    unsigned long p = p1(beta0, beta1);
    if (p > half) {
        throw std::logic_error("stage_index: p1 exceeds [beta0/2] for (" + std::to_string(beta0) +
                               "," + std::to_string(beta1) + ")");
    }
    return half + 1 - p;
}

namespace {

ResolutionStage make_stage(const CharExponents& c) {
    ResolutionStage stage;
    stage.exponents = c;
    unsigned long b0 = c.beta[0], b1 = c.beta[1];
    stage.multiplicity = b0;
    unsigned long r = b1 - b0;
    stage.n = (b1 + r - 1) / r;
    stage.p1 = p1(b0, b1);
    stage.curve_index = stage_index(b0, b1);
    stage.nu1 = b0 / 2;
    stage.nu2 = b0 - b0 / 2;
    stage.contribution = mpz_class(stage.nu1 - 1) * mpz_class(stage.nu2 - 1) + stage.curve_index - 1;
    return stage;
}

}  // namespace

ResolutionChain resolution_chain(const CharExponents& c) {
    if (c.smooth()) throw std::invalid_argument("resolution_chain: class is smooth");
    ResolutionChain chain;
    chain.mu = 0;
    mpz_class drop(0);
    CharExponents cur = c;
    while (!cur.smooth()) {
        ResolutionStage stage = make_stage(cur);
        chain.mu += mpz_class(stage.multiplicity) * (stage.multiplicity - 1);
        drop += stage.contribution;
        CharExponents next = blowup_exponents(cur);
        chain.stages.push_back(std::move(stage));
        cur = std::move(next);
    }
    chain.tau_min = chain.mu - drop;
    return chain;
}

mpz_class milnor_from_sequence(std::span<const unsigned long> seq) {
    mpz_class mu(0);
    for (unsigned long m : seq) {
        if (m < 2) throw std::invalid_argument("milnor_from_sequence: entries must be >= 2");
        mu += mpz_class(m) * (m - 1);
    }
    return mu;
}

mpz_class conductor_crosscheck(const CharExponents& c) {
    if (c.smooth()) throw std::invalid_argument("conductor_crosscheck: class is smooth");
    mpz_class mu(0);
    for (std::size_t i = 1; i < c.beta.size(); ++i) {
        mu += mpz_class(c.gcd_chain[i - 1] - c.gcd_chain[i]) * c.beta[i];
    }
    mu -= c.beta[0];
    mu += 1;
    return mu;
}

mpz_class tau_min(const CharExponents& c) {
    ResolutionChain chain = resolution_chain(c);
    mpz_class closed(0);
    for (const auto& stage : chain.stages) {
        mpz_class m(stage.multiplicity);
        mpz_class half(stage.multiplicity / 2);
        closed += m * m + half * (half - m - 1) - 1 + stage.p1;
    }
    if (closed != chain.tau_min) {
        throw std::logic_error("tau_min: closed form disagrees with the blow-up recursion");
    }
    return closed;
}

mpz_class dg_bound(const mpz_class& mu) {
    if (mu < 0) throw std::invalid_argument("dg_bound: negative Milnor number");
    mpz_class m = 1 + 4 * mu;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    if (s * s < m) s += 1;  // integer ceiling of sqrt(1 + 4mu)
    mpz_class t;
    mpz_class num = 6 * mu - 1 + s;
    mpz_cdiv_q_ui(t.get_mpz_t(), num.get_mpz_t(), 8);
    return t;
}

namespace {

void enumerate_classes(std::vector<unsigned long>& prefix, unsigned long e,
                       const ScanOptions& options, std::vector<std::vector<unsigned long>>& out) {
    if (e == 1) {
        out.push_back(prefix);
        return;
    }
    if (prefix.size() > options.max_pairs) return;
    for (unsigned long next = prefix.back() + 1; next <= options.max_beta1; ++next) {
        unsigned long g = std::gcd(e, next);
        if (g >= e) continue;
        prefix.push_back(next);
        enumerate_classes(prefix, g, options, out);
        prefix.pop_back();
    }
}

struct ClassChecks {
    std::vector<ScanViolation> violations;
    mpz_class ratio_slack;  // 4*tau - 3*mu
    mpz_class bound_slack;  // tau - dg_bound(mu)
    mpz_class sum_slack;    // 4*tau - 3*mu - sum(m_i - 1)
};

ClassChecks check_class(const std::vector<unsigned long>& beta) {
    ClassChecks checks;
    CharExponents c = validate_exponents(beta);
    ResolutionChain chain = resolution_chain(c);
    mpz_class tau = tau_min(c);  // also asserts the two tau routes agree

    mpz_class ratio = 4 * tau - 3 * chain.mu;
    checks.ratio_slack = ratio;
    if (ratio <= 0) checks.violations.push_back({beta, "4*tau_min > 3*mu"});

    checks.bound_slack = tau - dg_bound(chain.mu);
    if (checks.bound_slack < 0) checks.violations.push_back({beta, "tau_min >= dg_bound(mu)"});

    mpz_class sum_m1(0);
    mpz_class identity(0);
    for (const auto& stage : chain.stages) {
        sum_m1 += stage.multiplicity - 1;
        unsigned long delta = stage.multiplicity % 2 == 0 ? 0 : 3;
        identity += mpz_class(stage.multiplicity) + delta + 4 * (mpz_class(stage.p1) - 1);
    }
    checks.sum_slack = ratio - sum_m1;
    if (checks.sum_slack < 0) {
        checks.violations.push_back({beta, "4*tau_min - 3*mu >= sum(m_i - 1)"});
    }
    if (ratio != identity) {
        checks.violations.push_back({beta, "parity identity for 4*tau_min - 3*mu"});
    }
    return checks;
}

}  // namespace

ScanReport scan_classes(const ScanOptions& options) {
    if (options.max_beta0 < 2 || options.max_beta1 < 2) {
        throw std::invalid_argument("scan_classes: bounds must be >= 2");
    }
    std::vector<std::vector<unsigned long>> classes;
    for (unsigned long b0 = 2; b0 <= options.max_beta0; ++b0) {
        std::vector<unsigned long> prefix{b0};
        enumerate_classes(prefix, b0, options, classes);
    }

    std::vector<ClassChecks> results(classes.size());
    unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || classes.size() < 2) {
        for (std::size_t i = 0; i < classes.size(); ++i) results[i] = check_class(classes[i]);
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (classes.size() + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::size_t lo = w * chunk, hi = std::min(classes.size(), lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) results[i] = check_class(classes[i]);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    ScanReport report;
    report.class_count = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i < 64) report.sample_classes.push_back(classes[i]);
        auto& checks = results[i];
        for (auto& violation : checks.violations) report.violations.push_back(std::move(violation));
        if (i == 0 || checks.ratio_slack < report.min_ratio_slack.slack) {
            report.min_ratio_slack = {classes[i], checks.ratio_slack};
        }
        if (i == 0 || checks.bound_slack < report.min_bound_slack.slack) {
            report.min_bound_slack = {classes[i], checks.bound_slack};
        }
        if (i == 0 || checks.sum_slack < report.min_sum_slack.slack) {
            report.min_sum_slack = {classes[i], checks.sum_slack};
        }
    }
    return report;
}

}  // namespace plbranch
