#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "example_curves.hpp"
#include "helpers.hpp"
#include "plbranch/parser.hpp"
#include "plbranch/poly.hpp"

using namespace plbranch;

namespace {

Poly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_CASE("parser produces canonical term maps") {
    Poly f = P("y^5 - x^6 + x^4*y^3");
    REQUIRE(f.terms().size() == 3);
    CHECK(f.coeff(0, 5) == 1);
    CHECK(f.coeff(6, 0) == -1);
    CHECK(f.coeff(4, 3) == 1);

    CHECK(P("0").is_zero());
    CHECK(P("x - x").is_zero());

    Poly t = P("-147/8*x^4*y^4");
    REQUIRE(t.terms().size() == 1);
    CHECK(t.coeff(4, 4) == rational(-147, 8));

    CHECK(P("(x+y)^2") == P("x^2 + 2*x*y + y^2"));
    CHECK(P("  y ^ 2  -  x ^ 3 ") == P("y^2-x^3"));
    CHECK(P("2^3") == Poly(8));
    CHECK(P("-(x+y)*(x-y)") == P("y^2 - x^2"));
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(P("2x"), ParseError);        // implicit multiplication
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("x^-2"), ParseError);
    CHECK_THROWS_AS(P("x^(2)"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("z"), ParseError);
    CHECK_THROWS_AS(P("x*-y"), ParseError);

    try {
        P("x + 3/0*y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("ring arithmetic") {
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    Poly p = P("x^2*y - 3*x + 1/2");
    CHECK(p + Poly{} == p);
    CHECK(p - p == Poly{});

    auto c = curves::k56();
    Poly wedge = c.w1.A * c.w2.B - c.w2.A * c.w1.B;
    CHECK(wedge == Rational(8) * c.f);
}

TEST_CASE("partial derivatives") {
    Poly f = P("y^5 - x^6 + x^4*y^3");
    CHECK(partial(f, Var::y) == P("5*y^4 + 3*x^4*y^2"));
    CHECK(partial(f, Var::x) == P("-6*x^5 + 4*x^3*y^3"));
    CHECK(partial(P("7/3"), Var::x).is_zero());
}

TEST_CASE("order and homogeneous components") {
    CHECK(P("y^5 - x^6 + x^4*y^3").order() == 5);
    CHECK(!Poly{}.order().has_value());
    CHECK(P("605*y^2 + 198*x*y^3 - 88*x^6").order() == 2);

    Poly b = P("5*x^2 + 4/3*y^3 + 4/5*x^2*y^4");
    CHECK(homogeneous_component(b, 2) == P("5*x^2"));
    CHECK(homogeneous_component(b, 1).is_zero());
    CHECK(homogeneous_component(P("y^5 - x^6 + x^4*y^3"), 5) == P("y^5"));
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
    CHECK(!exact_divide(P("x^2"), P("y")).has_value());
    CHECK_THROWS_AS(exact_divide(P("x"), Poly{}), std::invalid_argument);

    auto c = curves::k511();
    Poly wedge = c.w1.A * c.w2.B - c.w2.A * c.w1.B;
    auto unit = exact_divide(wedge, c.f);
    REQUIRE(unit.has_value());
    CHECK(*unit == P("-24200 - 7920*x*y"));
}

TEST_CASE("substitution") {
    Poly x = Poly::variable(Var::x), y = Poly::variable(Var::y);
    CHECK(substitute(P("y^2 - x^3"), x, x * y) == P("x^2*y^2 - x^3"));
    CHECK(substitute(P("y^5 - x^11 + x^6*y^3"), x, x * y) == P("x^5*y^5 - x^11 + x^9*y^3"));
    // shear (x, y) -> (x, y + x)
    CHECK(substitute(P("y^5 - x^11 + x^6*y^3"), x, y + x) ==
          P("(y+x)^5 - x^11 + x^6*(y+x)^3"));
}

TEST_CASE("restriction to the exceptional line") {
    UniPoly r = restrict_to_line(P("605*y^2 + 198*x*y^3 - 88*x^6"), 2);
    CHECK(r == UniPoly({Rational(0), Rational(0), Rational(605)}));
    CHECK(restrict_to_line(Poly{}, 4).is_zero());
    CHECK(restrict_to_line(P("x^2 + x*y + y^2"), 2) ==
          UniPoly({Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("root multiplicities") {
    // (t+1)^3 (t-2) = t^4 + t^3 - 3t^2 - 5t - 2
    UniPoly q({rational(-2), rational(-5), rational(-3), rational(1), rational(1)});
    CHECK(root_multiplicity(q, rational(-1)) == 3);
    CHECK(root_multiplicity(q, rational(2)) == 1);
    CHECK(root_multiplicity(q, rational(5)) == 0);

    UniPoly s({Rational(0), Rational(0), Rational(330)});
    CHECK(root_multiplicity(s, Rational(0)) == 2);
    CHECK(!root_multiplicity(UniPoly{}, Rational(1)).has_value());
}

TEST_CASE("printing round-trips and is grammar-conformant") {
    CHECK(to_string(Poly{}) == "0");
    CHECK(to_string(P("-24200 - 7920*x*y")) == "-7920*x*y - 24200");
    CHECK(to_string(P("x^2 - y")) == "x^2 - y");
    CHECK(to_string(P("-1/2*x")) == "-1/2*x");
    CHECK(to_string(P("y^5 - x^6 + x^4*y^3")) == "x^4*y^3 - x^6 + y^5");

    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_poly(rng);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("algebra properties on random inputs") {
    std::mt19937 rng(987654321);
    for (int i = 0; i < 100; ++i) {
        Poly p = testutil::random_poly(rng);
        Poly q = testutil::random_poly(rng);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).order().value() == p.order().value() + q.order().value());
        }
        Poly d = testutil::random_nonzero_poly(rng);
        auto quotient = exact_divide(p * d, d);
        REQUIRE(quotient.has_value());
        CHECK(*quotient == p);
        // substituting the identity changes nothing
        CHECK(substitute(p, Poly::variable(Var::x), Poly::variable(Var::y)) == p);
        // homogeneous pieces sum back to the whole
        Poly sum;
        if (!p.is_zero()) {
            for (std::uint32_t d2 = p.order().value(); d2 <= p.total_degree().value(); ++d2) {
                sum += homogeneous_component(p, d2);
            }
        }
        CHECK(sum == p);
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x"), P("y")) == Poly(1));
    CHECK(gcd(Poly{}, Poly{}).is_zero());
    CHECK(gcd(P("2*x + 2*y"), Poly{}) == P("x + y"));
    CHECK(gcd(P("6"), P("4")) == Poly(1));

    Poly f = P("(y^2 - x^3)^2");
    Poly g = gcd(partial(f, Var::x), partial(f, Var::y));
    CHECK(g == primitive_part(P("y^2 - x^3")));

    std::mt19937 rng(13579);
    for (int i = 0; i < 30; ++i) {
        Poly a = testutil::random_nonzero_poly(rng, 4, 4);
        Poly b = testutil::random_nonzero_poly(rng, 4, 4);
        Poly c = testutil::random_nonzero_poly(rng, 3, 3);
        Poly g2 = gcd(a * c, b * c);
        // the common factor c divides the gcd
        auto q = exact_divide(g2, primitive_part(c));
        CHECK(q.has_value());
        // and the gcd divides both products
        CHECK(exact_divide(a * c, g2).has_value());
        CHECK(exact_divide(b * c, g2).has_value());
    }
}
