#include <cassert>
#include <stdexcept>
#include <vector>

#include "plbranch/poly.hpp"

// gcd over Q[x,y] by a primitive pseudo-remainder sequence in y with
// coefficients in Q[x]. Inputs here are tiny (curve germs and their
// derivatives), so the quadratic coefficient growth of the primitive PRS is
// not a concern.

namespace plbranch {

namespace {

// --- univariate layer: polynomials in x alone, dense ascending ---

std::vector<Rational> strip(std::vector<Rational> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<Rational> x_coeffs(const Poly& p) {
    std::vector<Rational> c;
    for (const auto& [m, v] : p.terms()) {
        assert(m.b == 0);
        if (c.size() <= m.a) c.resize(m.a + 1, Rational(0));
        c[m.a] = v;
    }
    return strip(std::move(c));
}

Poly poly_from_x(const std::vector<Rational>& c) {
    Poly p;
    for (std::uint32_t i = 0; i < c.size(); ++i) p.add_term(Mono{i, 0}, c[i]);
    return p;
}

// monic remainder of a by b (b nonzero)
std::vector<Rational> uni_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a = strip(std::move(a));
    }
    return a;
}

std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    while (!b.empty()) {
        auto r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// --- bivariate layer: vectors of y-coefficients, each a Poly in x ---

std::vector<Poly> y_coeffs(const Poly& p) {
    std::vector<Poly> c;
    for (const auto& [m, v] : p.terms()) {
        if (c.size() <= m.b) c.resize(m.b + 1);
        c[m.b].add_term(Mono{m.a, 0}, v);
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

Poly from_y_coeffs(const std::vector<Poly>& c) {
    Poly p;
    for (std::uint32_t b = 0; b < c.size(); ++b) {
        for (const auto& [m, v] : c[b].terms()) p.add_term(Mono{m.a, b}, v);
    }
    return p;
}

Poly content_x(const std::vector<Poly>& yc) {
    std::vector<Rational> g;
    for (const auto& coeff : yc) {
        if (coeff.is_zero()) continue;
        g = uni_gcd(std::move(g), x_coeffs(coeff));
        if (g.size() == 1) break;  // already a unit
    }
    return poly_from_x(g);
}

std::vector<Poly> divide_out(const std::vector<Poly>& yc, const Poly& divisor) {
    std::vector<Poly> out(yc.size());
    for (std::size_t i = 0; i < yc.size(); ++i) {
        if (yc[i].is_zero()) continue;
        auto q = exact_divide(yc[i], divisor);
        assert(q.has_value());
        out[i] = std::move(*q);
    }
    return out;
}

std::vector<Poly> strip_y(std::vector<Poly> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

// pseudo-remainder of a by b in y (deg_y b >= 1)
std::vector<Poly> prem_y(std::vector<Poly> a, const std::vector<Poly>& b) {
    const Poly& lead_b = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Poly lead_a = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& coeff : a) coeff *= lead_b;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead_a * b[i];
        a = strip_y(std::move(a));
    }
    return a;
}

}  // namespace

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1);
    for (const auto& [m, v] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& [m, v] : p.terms()) {
        mpz_class scaled = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.terms().rbegin()->second < 0) scale = -scale;
    return scale * p;
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return primitive_part(q);
    if (q.is_zero()) return primitive_part(p);
    if (p.is_constant() || q.is_constant()) return Poly(1);

    auto pc = y_coeffs(p);
    auto qc = y_coeffs(q);
    if (pc.size() == 1 && qc.size() == 1) {
        return primitive_part(poly_from_x(uni_gcd(x_coeffs(pc[0]), x_coeffs(qc[0]))));
    }
    if (pc.size() == 1) return gcd(pc[0], content_x(qc));
    if (qc.size() == 1) return gcd(qc[0], content_x(pc));

    Poly cont = poly_from_x(uni_gcd(x_coeffs(content_x(pc)), x_coeffs(content_x(qc))));
    auto a = divide_out(pc, content_x(pc));
    auto b = divide_out(qc, content_x(qc));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty() && b.size() >= 2) {
        auto r = prem_y(std::move(a), b);
        if (!r.empty()) r = divide_out(r, content_x(r));
        a = std::move(b);
        b = std::move(r);
    }
    // A nonzero remainder of y-degree 0 means the primitive parts are coprime.
    Poly pp_gcd = b.empty() ? from_y_coeffs(a) : Poly(1);
    return primitive_part(cont * pp_gcd);
}

}  // namespace plbranch
