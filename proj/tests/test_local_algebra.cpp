#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "example_curves.hpp"
#include "helpers.hpp"
#include "plbranch/local_algebra.hpp"
#include "plbranch/parser.hpp"

using namespace plbranch;

namespace {

Poly P(const char* text) { return parse_poly(text); }

std::vector<Poly> jacobian(const Poly& f) {
    return {partial(f, Var::x), partial(f, Var::y)};
}

}  // namespace

TEST_CASE("colength on monomial ideals") {
    auto r = colength({P("x"), P("y")});
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 1);

    r = colength({P("x^2"), P("y^3")});
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 6);
    CHECK(r.certified_degree == 6);

    // a unit generator collapses the quotient
    r = colength({P("3 + x")});
    CHECK(r.value == 0);
}

TEST_CASE("colength input validation") {
    CHECK_THROWS_AS(colength(std::initializer_list<Poly>{}), std::invalid_argument);
    CHECK_THROWS_AS(colength({Poly{}, Poly{}}), std::invalid_argument);
    // zero generators are ignored when a nonzero one is present
    auto r = colength({Poly{}, P("x"), P("y")});
    CHECK(r.value == 1);
}

TEST_CASE("cofactor ideal of the (5,6) curve has colength 1") {
    auto r = colength({P("-30*x - 8*x*y^4"), P("-30*y - 12*x^2*y^2")});
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 1);
}

TEST_CASE("Nakayama soundness: adding the certified power of the maximal ideal is free") {
    std::vector<Poly> gens = {P("x^2"), P("y^3")};
    auto r = colength(gens);
    REQUIRE(r.value.has_value());
    std::vector<Poly> padded = gens;
    for (std::uint32_t a = 0; a <= r.certified_degree; ++a) {
        padded.push_back(Poly::term(a, r.certified_degree - a, Rational(1)));
    }
    auto padded_r = colength(padded);
    CHECK(padded_r.value == r.value);

    std::vector<Poly> jac = jacobian(P("y^5 - x^6 + x^4*y^3"));
    r = colength(jac);
    REQUIRE(r.value.has_value());
    padded = jac;
    for (std::uint32_t a = 0; a <= r.certified_degree; ++a) {
        padded.push_back(Poly::term(a, r.certified_degree - a, Rational(1)));
    }
    padded_r = colength(padded);
    CHECK(padded_r.value == r.value);
}

TEST_CASE("certified dimension is stable at larger truncations") {
    for (const Poly& f : {P("y^5 - x^6 + x^4*y^3"), P("y^2 - x^3")}) {
        std::vector<Poly> gens = jacobian(f);
        auto r = colength(gens);
        REQUIRE(r.value.has_value());
        for (unsigned bump = 1; bump <= 2; ++bump) {
            auto step = detail::truncated_colength(gens, r.certified_degree + bump);
            CHECK(step.certified);
            CHECK(step.dimension == *r.value);
        }
    }
}

TEST_CASE("milnor numbers") {
    CHECK(milnor(P("y^2 - x^3")) == 2);
    CHECK(milnor(P("y^5 - x^6 + x^4*y^3")) == 20);
    CHECK(milnor(P("y^5 - x^11 + x^6*y^3")) == 40);
    CHECK(milnor(P("y - x^2")) == 0);  // smooth
}

TEST_CASE("milnor of quasi-homogeneous curves is (p-1)(q-1)") {
    for (unsigned p = 2; p <= 6; ++p) {
        for (unsigned q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(milnor(curves::quasi_homogeneous(p, q).f) == (p - 1) * (q - 1));
        }
    }
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina(P("y^2 - x^3")) == 2);
    CHECK(tjurina(P("y^5 - x^6 + x^4*y^3")) == 19);
    CHECK(tjurina(P("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4")) == 37);
}

TEST_CASE("tjurina bounded by milnor, equality for quasi-homogeneous") {
    for (const auto& c : {curves::k56(), curves::k511(), curves::k78()}) {
        CHECK(tjurina(c.f) <= milnor(c.f));
    }
    for (unsigned p = 2; p <= 4; ++p) {
        for (unsigned q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Poly f = curves::quasi_homogeneous(p, q).f;
            CHECK(tjurina(f) == milnor(f));
        }
    }
}

TEST_CASE("non-isolated inputs are rejected") {
    CHECK(is_isolated(P("y^2 - x^3")));
    CHECK(is_isolated(P("x*y*(x + y)")));
    CHECK(!is_isolated(P("(y^2 - x^3)^2")));
    CHECK(!is_isolated(P("x^2*y")));
    CHECK_THROWS_AS(milnor(P("(y^2 - x^3)^2")), NonIsolatedError);
    CHECK_THROWS_AS(tjurina(P("x^2*(x + y)")), NonIsolatedError);
    CHECK_THROWS_AS(is_isolated(Poly{}), std::invalid_argument);
    CHECK_THROWS_AS(is_isolated(P("1 + x")), std::invalid_argument);
}

TEST_CASE("intersection multiplicities") {
    CHECK(intersection_multiplicity(P("x"), P("y")) == 1);

    Poly f = P("y^5 - x^6 + x^4*y^3");
    CHECK(intersection_multiplicity(partial(f, Var::y), f) == 24);  // mu + nu - 1

    // cofactors of the (5,11) basis after the shear (x,y) -> (x,x+y)
    Poly g1 = P("3025*(x+y) + 990*x*(y+x)^2");
    Poly g2 = P("3025*x^4 + 990*x^5*(y+x)");
    CHECK(intersection_multiplicity(g1, g2) == 4);

    // infinite when a branch through the origin is shared
    CHECK(!intersection_multiplicity(P("x"), P("x")).has_value());
    CHECK(!intersection_multiplicity(P("x*(1+y)"), P("x*(1+x)")).has_value());
    CHECK(!intersection_multiplicity(Poly{}, Poly{}).has_value());
    CHECK(!intersection_multiplicity(P("y^2 - x^3"), Poly{}).has_value());
    // a unit makes the ideal everything even against the zero polynomial
    CHECK(intersection_multiplicity(P("5"), Poly{}) == 0);
}

TEST_CASE("derivative intersection identity I(f_y, f) = mu + nu - 1") {
    for (const auto& c : {curves::quasi_homogeneous(2, 3), curves::quasi_homogeneous(5, 6),
                          curves::k56(), curves::k511(), curves::k78()}) {
        auto i = intersection_multiplicity(partial(c.f, Var::y), c.f);
        REQUIRE(i.has_value());
        CHECK(*i == milnor(c.f) + c.f.order().value() - 1);
    }
}

TEST_CASE("tangent lines") {
    auto t = tangent_line(P("y^5 - x^6 + x^4*y^3"));
    REQUIRE(t.has_value());
    CHECK(t->epsilon == 0);
    CHECK(t->multiplicity == 5);

    t = tangent_line(P("(y+x)^5 - x^11 + x^6*(y+x)^3"));
    REQUIRE(t.has_value());
    CHECK(t->epsilon == 1);
    CHECK(t->multiplicity == 5);

    t = tangent_line(P("(y - 2/3*x)^2 - x^5"));
    REQUIRE(t.has_value());
    CHECK(t->epsilon == rational(-2, 3));
    CHECK(t->multiplicity == 2);

    CHECK(!tangent_line(P("x*y")).has_value());
    CHECK(!tangent_line(P("x^2 - y^3")).has_value());  // tangent cone x^2
    CHECK(!tangent_line(P("x^2 + y^2")).has_value());  // no rational line
    CHECK_THROWS_AS(tangent_line(Poly{}), std::invalid_argument);
}

TEST_CASE("strict transforms") {
    CHECK(strict_transform(P("y^2 - x^3")).transform == P("y^2 - x"));
    CHECK(strict_transform(P("y^5 - x^11 + x^6*y^3")).transform == P("y^5 - x^6 + x^4*y^3"));

    auto blow = strict_transform(P("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4"));
    CHECK(blow.transform.order() == 1);  // smooth after one blow-up
    CHECK(blow.line.multiplicity == 7);

    // recentring moves the strict-transform point to the origin
    auto sheared = strict_transform(P("(y+x)^5 - x^11 + x^6*(y+x)^3"));
    CHECK(sheared.line.epsilon == 1);
    CHECK(sheared.transform.at_origin() == 0);
    CHECK(milnor(sheared.transform) == 20);

    CHECK_THROWS_AS(strict_transform(P("x*y")), NotSingleLineError);
}

TEST_CASE("multiplicity sequence from iterated blow-ups reproduces mu") {
    for (const auto& c : {curves::k56(), curves::k511(), curves::k78()}) {
        unsigned long mu = milnor(c.f);
        unsigned long sum = 0;
        Poly cur = c.f;
        int guard = 0;
        while (cur.order().value() >= 2) {
            REQUIRE(++guard < 32);
            auto blow = strict_transform(cur);
            sum += static_cast<unsigned long>(blow.line.multiplicity) *
                   (blow.line.multiplicity - 1);
            cur = blow.transform;
        }
        CHECK(sum == mu);
    }
}

namespace {

// Independent dense implementation of the truncated quotient dimension:
// rational Gaussian elimination over all monomial shifts, no pivots shared
// with the production engine.
unsigned long dense_truncated_dimension(const std::vector<Poly>& gens, unsigned degree) {
    auto col = [](std::uint32_t a, std::uint32_t b) {
        std::uint32_t d = a + b;
        return d * (d + 1) / 2 + a;
    };
    const std::uint32_t cols = degree * (degree + 1) / 2;
    std::vector<std::vector<Rational>> rows;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        std::uint32_t ord = g.order().value();
        for (std::uint32_t s = 0; ord + s < degree; ++s) {
            for (std::uint32_t da = 0; da <= s; ++da) {
                std::vector<Rational> row(cols, Rational(0));
                for (const auto& [m, c] : g.terms()) {
                    std::uint32_t a = m.a + da, b = m.b + s - da;
                    if (a + b < degree) row[col(a, b)] = c;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    unsigned long rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (std::uint32_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!used[r] && rows[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        ++rank;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot || rows[r][c] == 0) continue;
            Rational factor = rows[r][c] / rows[pivot][c];
            for (std::uint32_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[pivot][k];
        }
    }
    return cols - rank;
}

}  // namespace

TEST_CASE("sparse engine agrees with a dense rational elimination") {
    std::vector<std::vector<Poly>> cases = {
        {P("x^2"), P("y^3")},
        {P("x^3 - y^4"), P("x*y")},
        jacobian(P("y^2 - x^3")),
        jacobian(P("y^5 - x^6 + x^4*y^3")),
        {P("y^5 - x^6 + x^4*y^3"), partial(P("y^5 - x^6 + x^4*y^3"), Var::x),
         partial(P("y^5 - x^6 + x^4*y^3"), Var::y)},
        {P("-30*x - 8*x*y^4"), P("-30*y - 12*x^2*y^2")},
    };
    std::mt19937 rng(31415);
    for (int i = 0; i < 12; ++i) {
        // random ideal cofinite by construction: pure powers plus noise
        std::vector<Poly> gens{Poly::term(2 + rng() % 4, 0, Rational(1)),
                               Poly::term(0, 2 + rng() % 4, Rational(1)),
                               testutil::random_poly(rng, 4, 5)};
        cases.push_back(gens);
    }
    for (const auto& gens : cases) {
        auto r = colength(gens);
        REQUIRE(r.value.has_value());
        CHECK(dense_truncated_dimension(gens, r.certified_degree) == *r.value);
    }
}

TEST_CASE("monomial ideals match the staircase count") {
    std::mt19937 rng(2718281);
    for (int trial = 0; trial < 25; ++trial) {
        unsigned long ax = 1 + testutil::pick(rng, 6);
        unsigned long by = 1 + testutil::pick(rng, 6);
        std::vector<std::pair<unsigned long, unsigned long>> exps{{ax, 0}, {0, by}};
        for (unsigned extra = testutil::pick(rng, 3); extra > 0; --extra) {
            exps.emplace_back(1 + testutil::pick(rng, 6), 1 + testutil::pick(rng, 6));
        }
        std::vector<Poly> gens;
        for (auto [a, b] : exps) {
            gens.push_back(Poly::term(static_cast<std::uint32_t>(a),
                                      static_cast<std::uint32_t>(b), Rational(1)));
        }
        unsigned long expected = 0;
        for (unsigned long u = 0; u < ax; ++u) {
            for (unsigned long v = 0; v < by; ++v) {
                bool inside = false;
                for (auto [a, b] : exps) inside = inside || (u >= a && v >= b);
                if (!inside) ++expected;
            }
        }
        auto r = colength(gens);
        REQUIRE(r.value.has_value());
        CHECK(*r.value == expected);
    }
}

TEST_CASE("cap exhaustion is reported without a certificate") {
    auto r = colength({P("x")}, 64);
    CHECK(r.exceeded_cap());
    CHECK(r.certified_degree == 0);
    CHECK(r.cap == 64);

    // the schedule starts beyond a tiny cap
    CHECK_THROWS_AS(milnor(P("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4"), 8), CapExceededError);
    CHECK(milnor(P("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4"), 64) == 42);
}
