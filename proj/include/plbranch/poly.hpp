#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plbranch {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) through arithmetic.
using Rational = mpq_class;

// num/den as a canonical Rational; den must be nonzero.
Rational rational(long num, long den = 1);

enum class Var { x, y };

struct Mono {
    std::uint32_t a = 0;  // x exponent
    std::uint32_t b = 0;  // y exponent

    std::uint32_t degree() const { return a + b; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

// Graded lexicographic order with x heavier than y, smallest monomial first:
// 1 < y < x < y^2 < x*y < x^2 < ...
struct MonoLess {
    bool operator()(const Mono& m, const Mono& n) const {
        if (m.degree() != n.degree()) return m.degree() < n.degree();
        return m.a < n.a;
    }
};

// Sparse bivariate polynomial over Q. Zero coefficients are never stored, so
// the representation is canonical and operator== decides equality.
class Poly {
  public:
    using Terms = std::map<Mono, Rational, MonoLess>;

    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(long constant);

    static Poly term(std::uint32_t a, std::uint32_t b, const Rational& coeff);
    static Poly variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{}); }

    // Smallest total degree over stored terms; empty for the zero polynomial.
    std::optional<std::uint32_t> order() const;
    std::optional<std::uint32_t> total_degree() const;

    Rational coeff(std::uint32_t a, std::uint32_t b) const;
    Rational at_origin() const { return coeff(0, 0); }
    const Terms& terms() const { return terms_; }

    // Accumulates c on monomial m, erasing the entry if it cancels to zero.
    void add_term(const Mono& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { lhs += rhs; return lhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { lhs -= rhs; return lhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.terms_ == rhs.terms_; }

  private:
    Terms terms_;
};

Poly operator*(const Rational& c, Poly p);

Poly partial(const Poly& p, Var v);

// Sum of the terms of total degree exactly d (possibly zero).
Poly homogeneous_component(const Poly& p, std::uint32_t d);

Poly pow(const Poly& base, std::uint32_t e);

// Quotient p/d when d divides p exactly. Reduction is against the single
// divisor d under the graded-lex leading term, so a zero final remainder is
// equivalent to divisibility. d must be nonzero.
std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

// p(for_x, for_y), evaluated exactly.
Poly substitute(const Poly& p, const Poly& for_x, const Poly& for_y);

// gcd over Q[x,y], returned integer-primitive with positive leading
// coefficient; gcd(p, 0) = primitive_part(p), gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);

// Scalar multiple of p with coprime integer coefficients and positive
// graded-lex leading coefficient.
Poly primitive_part(const Poly& p);

// Canonical text form: descending graded-lex terms, explicit '*' and '^',
// coefficients as (signed) rationals. Parses back to the same polynomial.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

// Dense univariate polynomial over Q, coefficients by ascending degree.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is empty.
    std::optional<std::uint32_t> degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::uint32_t k) const;

    Rational eval(const Rational& at) const;
    UniPoly times_var() const;  // multiply by the variable

    UniPoly& operator+=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { lhs += rhs; return lhs; }
    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  private:
    std::vector<Rational> coeffs_;
};

// The degree-d homogeneous component of p evaluated at (1, t), as a
// polynomial in t.
UniPoly restrict_to_line(const Poly& p, std::uint32_t d);

// Multiplicity of the root t = at (0 when q(at) != 0); empty for the zero
// polynomial, whose vanishing order is infinite.
std::optional<std::uint32_t> root_multiplicity(const UniPoly& q, const Rational& at);

}  // namespace plbranch
