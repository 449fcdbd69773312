#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>

#include "plbranch/poly.hpp"

namespace plbranch {

inline constexpr unsigned kDefaultColengthCap = 512;

// The input has a non-isolated singularity at the origin.
struct NonIsolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The truncation degree reached the cap before a Nakayama certificate fired.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The tangent cone is not a power of a single rational line.
struct NotSingleLineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ColengthResult {
    // dim of the local quotient ring; empty when no certificate fired within
    // the cap.
    std::optional<unsigned long> value;
    // Truncation degree D at which the certificate m^(D-1) <= I + m^D fired.
    unsigned certified_degree = 0;
    unsigned cap = kDefaultColengthCap;

    bool exceeded_cap() const { return !value.has_value(); }
};

// dim_Q Q[[x,y]]/(gens) at the origin. Builds the span of the shifted
// generators among monomials of total degree < D for D = 2*min_order+2,
// doubling until the Nakayama check certifies that every degree-(D-1)
// monomial lies in the span, or D passes the cap.
ColengthResult colength(std::span<const Poly> gens, unsigned cap = kDefaultColengthCap);
ColengthResult colength(std::initializer_list<Poly> gens, unsigned cap = kDefaultColengthCap);

namespace detail {

struct TruncationStep {
    unsigned long dimension;  // codimension of the span below the cut degree
    bool certified;           // every monomial of degree (cut-1) lies in the span
};

// Single fixed-degree truncation, exposed for stability checks.
TruncationStep truncated_colength(std::span<const Poly> gens, unsigned degree);

}  // namespace detail

// True iff f has an isolated singularity at the origin, decided exactly:
// f, f_x, f_y have a common factor through the origin iff the colength is
// infinite. Requires f != 0 and f(0,0) = 0.
bool is_isolated(const Poly& f);

// Milnor number: colength of the Jacobian ideal (f_x, f_y).
unsigned long milnor(const Poly& f, unsigned cap = kDefaultColengthCap);

// Tjurina number: colength of (f, f_x, f_y).
unsigned long tjurina(const Poly& f, unsigned cap = kDefaultColengthCap);

// Intersection multiplicity of g and h at the origin; empty means infinite
// (the two share a branch through the origin).
std::optional<unsigned long> intersection_multiplicity(const Poly& g, const Poly& h,
                                                       unsigned cap = kDefaultColengthCap);

struct TangentLine {
    Rational epsilon;            // tangent cone is c*(y + epsilon*x)^multiplicity
    std::uint32_t multiplicity;  // order of the curve
};

// Tangent data when the lowest homogeneous part of f is a power of a single
// line y + eps*x with rational eps; empty otherwise. Requires f != 0 and
// f(0,0) = 0.
std::optional<TangentLine> tangent_line(const Poly& f);

struct BlowupResult {
    Poly transform;    // strict transform, recentred at the origin
    TangentLine line;  // tangent data consumed by the blow-up
};

// One blow-up in the chart (x, y) -> (x, x*y): divides the pullback by
// x^multiplicity and moves the point (0, -eps) of the strict transform to
// the origin. Throws NotSingleLineError when tangent_line fails.
BlowupResult strict_transform(const Poly& f);

}  // namespace plbranch
