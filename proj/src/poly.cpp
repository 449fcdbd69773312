#include "plbranch/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace plbranch {

Rational rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Mono{}, constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::term(std::uint32_t a, std::uint32_t b, const Rational& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.emplace(Mono{a, b}, coeff);
    return p;
}

Poly Poly::variable(Var v) {
    return v == Var::x ? term(1, 0, 1) : term(0, 1, 1);
}

std::optional<std::uint32_t> Poly::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::optional<std::uint32_t> Poly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

Rational Poly::coeff(std::uint32_t a, std::uint32_t b) const {
    auto it = terms_.find(Mono{a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly r;
    for (const auto& [m, c] : lhs.terms_) {
        for (const auto& [n, d] : rhs.terms_) {
            r.add_term(Mono{m.a + n.a, m.b + n.b}, c * d);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly operator*(const Rational& c, Poly p) {
    if (c == 0) return Poly{};
    Poly r;
    for (const auto& [m, v] : p.terms()) r.add_term(m, c * v);
    return r;
}

Poly partial(const Poly& p, Var v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (v == Var::x) {
            if (m.a > 0) r.add_term(Mono{m.a - 1, m.b}, c * m.a);
        } else {
            if (m.b > 0) r.add_term(Mono{m.a, m.b - 1}, c * m.b);
        }
    }
    return r;
}

Poly homogeneous_component(const Poly& p, std::uint32_t d) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == d) r.add_term(m, c);
        if (m.degree() > d) break;  // terms are sorted by total degree
    }
    return r;
}

Poly pow(const Poly& base, std::uint32_t e) {
    Poly r(1);
    Poly b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return r;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    Poly q;
    Poly r = p;
    const auto& [dm, dc] = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        if (rm.a < dm.a || rm.b < dm.b) return std::nullopt;
        Poly t = Poly::term(rm.a - dm.a, rm.b - dm.b, rc / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly substitute(const Poly& p, const Poly& for_x, const Poly& for_y) {
    if (p.is_zero()) return Poly{};
    std::uint32_t max_a = 0, max_b = 0;
    for (const auto& [m, c] : p.terms()) {
        max_a = std::max(max_a, m.a);
        max_b = std::max(max_b, m.b);
    }
    std::vector<Poly> xp(max_a + 1), yp(max_b + 1);
    xp[0] = Poly(1);
    yp[0] = Poly(1);
    for (std::uint32_t i = 1; i <= max_a; ++i) xp[i] = xp[i - 1] * for_x;
    for (std::uint32_t i = 1; i <= max_b; ++i) yp[i] = yp[i - 1] * for_y;
    Poly r;
    for (const auto& [m, c] : p.terms()) r += c * (xp[m.a] * yp[m.b]);
    return r;
}

namespace {

// One printed term following the expression grammar; sign handled by caller.
void print_term(std::ostringstream& os, const Mono& m, const Rational& abs_coeff) {
    const bool unit_coeff = abs_coeff == 1;
    if (m.degree() == 0) {
        os << abs_coeff.get_str();
        return;
    }
    if (!unit_coeff) os << abs_coeff.get_str() << "*";
    if (m.a > 0) {
        os << "x";
        if (m.a > 1) os << "^" << m.a;
        if (m.b > 0) os << "*";
    }
    if (m.b > 0) {
        os << "y";
        if (m.b > 1) os << "^" << m.b;
    }
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool negative = it->second < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        print_term(os, it->first, abs(it->second));
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << to_string(p);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::uint32_t> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<std::uint32_t>(coeffs_.size() - 1);
}

Rational UniPoly::coeff(std::uint32_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::times_var() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    *this = UniPoly(std::move(c));
    return *this;
}

UniPoly restrict_to_line(const Poly& p, std::uint32_t d) {
    std::vector<Rational> c(d + 1, Rational(0));
    for (const auto& [m, v] : p.terms()) {
        if (m.degree() == d) c[m.b] = v;
    }
    return UniPoly(std::move(c));
}

std::optional<std::uint32_t> root_multiplicity(const UniPoly& q, const Rational& at) {
    if (q.is_zero()) return std::nullopt;
    std::vector<Rational> c = q.coeffs();
    std::uint32_t mult = 0;
    while (true) {
        Rational rem(0);
        for (std::size_t i = c.size(); i-- > 0;) rem = rem * at + c[i];
        if (rem != 0) return mult;
        if (c.size() == 1) return mult;  // nonzero constant cannot vanish at a point
        // Synthetic division by (t - at); the leading coefficient stays nonzero.
        std::vector<Rational> quot(c.size() - 1, Rational(0));
        Rational carry = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            quot[i] = carry;
            carry = c[i] + at * carry;
        }
        c = std::move(quot);
        ++mult;
    }
}

}  // namespace plbranch
