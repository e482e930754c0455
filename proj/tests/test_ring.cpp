#include "l2euler/polytope.hpp"
#include "l2euler/rational_function.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace l2euler;
using testutil::Rng;

TEST_SUITE_BEGIN("ring");

namespace {

LaurentPoly t1(int nvars, int power = 1) { return LaurentPoly::variable(nvars, 0, power); }

}  // namespace

TEST_CASE("laurent arithmetic basics")
{
    // (1 + t)(1 - t) = 1 - t^2
    LaurentPoly one = LaurentPoly::one(1);
    LaurentPoly f = one + t1(1);
    LaurentPoly g = one - t1(1);
    CHECK(f * g == one - t1(1, 2));

    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly h = rng.laurent(2, 4, 4);
        CHECK(h * LaurentPoly::one(2) == h);
    }
    CHECK_THROWS_AS(LaurentPoly::one(1) + LaurentPoly::one(2), InputError);
}

TEST_CASE("laurent distributivity on random triples")
{
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng.uniform(1, 3));
        LaurentPoly f = rng.laurent(n, 3, 3, false);
        LaurentPoly g = rng.laurent(n, 3, 3, false);
        LaurentPoly h = rng.laurent(n, 3, 3, false);
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("poly_gcd examples")
{
    // gcd(f, 0) is f normalized.
    Rng rng(3);
    Poly f = rng.poly(2, 3, 4);
    CHECK(poly_gcd(f, Poly::zero(2)) == normalize_primitive(f));
    CHECK(poly_gcd(Poly::zero(2), f) == normalize_primitive(f));
    CHECK_THROWS_AS(poly_gcd(Poly::zero(1), Poly::zero(1)), InputError);

    // gcd(t^2 - 1, t - 1) = t - 1
    Poly t = Poly::variable(1, 0);
    Poly one = Poly::one(1);
    CHECK(poly_gcd(t * t - one, t - one) == t - one);
}

TEST_CASE("poly_gcd divides and gcd*lcm relation on random inputs")
{
    Rng rng(4);
    for (int i = 0; i < 60; ++i) {
        const int n = static_cast<int>(rng.uniform(1, 2));
        Poly f = rng.poly(n, 2, 3);
        Poly g = rng.poly(n, 2, 3);
        Poly h = rng.poly(n, 2, 2);
        Poly d = poly_gcd(f * h, g * h);
        CHECK(poly_divides(d, f * h));
        CHECK(poly_divides(d, g * h));
        CHECK(poly_divides(h, d));  // any common divisor divides the gcd
        // gcd * lcm = f * g up to the primitive normalization.
        Poly fg = f * g;
        Poly lcm = poly_divexact(fg, poly_gcd(f, g));
        CHECK(normalize_primitive(poly_gcd(f, g) * lcm) == normalize_primitive(fg));
    }
}

TEST_CASE("rational function field identities")
{
    RationalFunction t = RationalFunction::variable(1, 0);
    RationalFunction one = RationalFunction::one(1);

    // (f/g)*(g/f) = 1
    RationalFunction f = (t * t + one) / (t - one);
    CHECK(f * f.inverse() == one);
    // 1/t * t = 1
    CHECK(t.inverse() * t == one);
    CHECK_THROWS_AS(RationalFunction::zero(1).inverse(), InputError);
}

TEST_CASE("field axioms on random triples")
{
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng.uniform(0, 2));
        RationalFunction a = rng.rf(n);
        RationalFunction b = rng.rf(n);
        RationalFunction c = rng.rf(n);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction::one(n));
    }
}

TEST_CASE("canonical form is unique")
{
    // The same element built along different routes compares equal.
    Poly t = Poly::variable(1, 0);
    Poly one = Poly::one(1);
    RationalFunction a((t * t - one), (t + one) * (t + one));       // (t-1)/(t+1)
    RationalFunction b((t - one) * t, (t + one) * t);               // same after cancelling t
    RationalFunction c = RationalFunction(t - one, t + one);
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a.den().grlex_lead().second > 0);

    // Scale invariance: (2f)/(2g) = f/g with integer-primitive denominator.
    RationalFunction d(t * Rational(2), (t + one) * Rational(2));
    CHECK(d == RationalFunction(t, t + one));

    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        RationalFunction x = rng.rf(2);
        Poly junk = rng.poly(2, 2, 2);
        RationalFunction y(x.num() * junk, x.den() * junk);
        CHECK(x == y);
    }
}

TEST_CASE("newton polytope examples")
{
    // Nonzero constant: the origin.
    CHECK(newton_polytope(LaurentPoly::constant(2, 7)).vertices() ==
          std::vector<LatticePoint>{{0, 0}});

    // 1 + t1^2 + t2: three affinely independent vertices.
    LaurentPoly f = LaurentPoly::one(2) + LaurentPoly::variable(2, 0, 2) +
                    LaurentPoly::variable(2, 1);
    CHECK(newton_polytope(f).vertices() ==
          std::vector<LatticePoint>{{0, 0}, {0, 1}, {2, 0}});

    // Collinear support keeps the endpoints only.
    LaurentPoly g = LaurentPoly::one(1) + t1(1, 1) + t1(1, 2);
    CHECK(newton_polytope(g).vertices() == std::vector<LatticePoint>{{0}, {2}});

    CHECK_THROWS_AS(newton_polytope(LaurentPoly::zero(1)), InputError);
}

TEST_CASE("newton polytope of products is the minkowski sum")
{
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng.uniform(1, 3));
        LaurentPoly f = rng.laurent(n, 5, 4);
        LaurentPoly g = rng.laurent(n, 5, 4);
        CHECK(newton_polytope(f * g) == minkowski_sum(newton_polytope(f), newton_polytope(g)));
    }
}

TEST_CASE("polytope data is invariant under monomial shifts")
{
    Rng rng(8);
    for (int i = 0; i < 40; ++i) {
        const int n = static_cast<int>(rng.uniform(1, 3));
        LaurentPoly f = rng.laurent(n, 4, 4);
        ExpVec shift(static_cast<std::size_t>(n), 0);
        for (auto& x : shift) x = static_cast<int>(rng.uniform(-3, 3));
        LatticePoint by(shift.begin(), shift.end());
        CHECK(newton_polytope(f.shifted(shift)) == newton_polytope(f).translated(by));
        IVec phi(static_cast<std::size_t>(n), 1);
        CHECK(seminorm_eval(newton_polytope(f.shifted(shift)), phi) ==
              seminorm_eval(newton_polytope(f), phi));
    }
}

TEST_SUITE_END();
