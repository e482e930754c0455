#include "l2euler/polytope.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace l2euler;
using testutil::Rng;

TEST_SUITE_BEGIN("polytope");

TEST_CASE("canonicalize examples")
{
    // Collinear middle point is removed.
    CHECK(canonicalize(1, {{0}, {1}, {2}}).vertices() == std::vector<LatticePoint>{{0}, {2}});
    // A single point is itself.
    CHECK(canonicalize(3, {{1, 2, 3}}).vertices() == std::vector<LatticePoint>{{1, 2, 3}});
    // (1,1) is the midpoint of (2,0) and (0,2).
    CHECK(canonicalize(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}).vertices() ==
          std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}});
    CHECK_THROWS_AS(canonicalize(1, {}), InputError);
    CHECK_THROWS_AS(canonicalize(7, {LatticePoint(7, 0)}), InputError);
}

TEST_CASE("canonicalize is idempotent")
{
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        IntegralPolytope p = rng.polytope(dim, static_cast<int>(rng.uniform(1, 7)), 4);
        CHECK(canonicalize(dim, p.vertices()) == p);
    }
}

TEST_CASE("in_convex_hull exactness")
{
    // Exact rational separation: (1,1) is in the hull of the triangle,
    // (2,1) is not.
    std::vector<LatticePoint> tri = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(in_convex_hull(tri, {1, 1}));
    CHECK_FALSE(in_convex_hull(tri, {2, 1}));
    CHECK(in_convex_hull(tri, {0, 0}));
    CHECK_FALSE(in_convex_hull({}, {0}));
}

TEST_CASE("minkowski sum examples")
{
    IntegralPolytope origin = canonicalize(2, {{0, 0}});
    IntegralPolytope seg1 = canonicalize(2, {{0, 0}, {1, 0}});
    IntegralPolytope seg2 = canonicalize(2, {{0, 0}, {0, 1}});
    CHECK(minkowski_sum(origin, seg1) == seg1);
    CHECK(minkowski_sum(seg1, seg2).vertices() ==
          std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(minkowski_sum(origin, canonicalize(1, {{0}})), InputError);
}

TEST_CASE("minkowski sum is commutative and associative on random inputs")
{
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        IntegralPolytope p = rng.polytope(dim, 4, 3);
        IntegralPolytope q = rng.polytope(dim, 4, 3);
        CHECK(minkowski_sum(p, q) == minkowski_sum(q, p));
    }
    for (int i = 0; i < 20; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 2));
        IntegralPolytope p = rng.polytope(dim, 3, 3);
        IntegralPolytope q = rng.polytope(dim, 3, 3);
        IntegralPolytope r = rng.polytope(dim, 3, 3);
        CHECK(minkowski_sum(minkowski_sum(p, q), r) == minkowski_sum(p, minkowski_sum(q, r)));
    }
}

TEST_CASE("seminorm examples and additivity")
{
    // Points evaluate to zero.
    IntegralPolytope pt = canonicalize(2, {{3, -1}});
    CHECK(seminorm_eval(pt, {5, 7}) == Rational(0));

    IntegralPolytope tri = canonicalize(2, {{0, 0}, {2, 0}, {0, 2}});
    CHECK(seminorm_eval(tri, {1, 0}) == Rational(1));
    CHECK(seminorm_eval(tri, {1, 1}) == Rational(1));
    CHECK(seminorm_eval(tri, {1, -1}) == Rational(2));  // half-integers allowed in general
    CHECK(seminorm_eval(canonicalize(1, {{0}, {1}}), {1}) == Rational(1, 2));

    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        IntegralPolytope p = rng.polytope(dim, 4, 3);
        IntegralPolytope q = rng.polytope(dim, 4, 3);
        IVec phi(static_cast<std::size_t>(dim));
        for (auto& c : phi) c = rng.uniform(-4, 4);
        CHECK(seminorm_eval(minkowski_sum(p, q), phi) ==
              seminorm_eval(p, phi) + seminorm_eval(q, phi));
    }
}

TEST_CASE("seminorm is invariant under translation and negation")
{
    Rng rng(34);
    for (int i = 0; i < 50; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        IntegralPolytope p = rng.polytope(dim, 4, 3);
        IVec phi(static_cast<std::size_t>(dim));
        for (auto& c : phi) c = rng.uniform(-4, 4);
        LatticePoint by(static_cast<std::size_t>(dim));
        for (auto& c : by) c = rng.uniform(-3, 3);
        CHECK(seminorm_eval(p.translated(by), phi) == seminorm_eval(p, phi));
        CHECK(seminorm_eval(p.negated(), phi) == seminorm_eval(p, phi));
    }
}

TEST_CASE("difference equality examples")
{
    Rng rng(35);
    IntegralPolytope p = rng.polytope(2, 4, 3);
    IntegralPolytope q = rng.polytope(2, 4, 3);
    // [P] - [P] = [Q] - [Q]
    CHECK(difference_equal({p, p}, {q, q}));
    // Distinct polytopes against the origin differ.
    IntegralPolytope origin = canonicalize(2, {{0, 0}});
    IntegralPolytope p2 = minkowski_sum(p, canonicalize(2, {{0, 0}, {1, 0}}));
    CHECK_FALSE(difference_equal({p, origin}, {p2, origin}));
    CHECK_THROWS_AS(difference_equal({p, p}, {canonicalize(1, {{0}}), canonicalize(1, {{0}})}),
                    InputError);
}

TEST_CASE("radstrom cancellation on random triples")
{
    Rng rng(36);
    for (int i = 0; i < 60; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        IntegralPolytope p = rng.polytope(dim, 4, 3);
        IntegralPolytope q = rng.polytope(dim, 4, 3);
        IntegralPolytope r = rng.polytope(dim, 4, 3);
        CHECK((minkowski_sum(p, r) == minkowski_sum(q, r)) == (p == q));
        CHECK(difference_equal({minkowski_sum(p, r), minkowski_sum(q, r)}, {p, q}));
    }
}

TEST_CASE("polytope_of_unit examples")
{
    LaurentPoly one = LaurentPoly::one(2);
    Rng rng(37);
    LaurentPoly f = rng.laurent(2, 3, 4);
    LaurentPoly g = rng.laurent(2, 3, 4);
    LaurentPoly h = rng.laurent(2, 3, 3);

    // f/1 is [P(f)] - [origin].
    PolytopeDifference d = polytope_of_unit(f, one);
    CHECK(d.plus == newton_polytope(f));
    CHECK(d.minus.vertices() == std::vector<LatticePoint>{{0, 0}});

    // Well-defined on the fraction: f*h/(g*h) equals f/g.
    CHECK(difference_equal(polytope_of_unit(f * h, g * h), polytope_of_unit(f, g)));

    // The class of 1 is zero.
    CHECK(difference_equal(polytope_of_unit(one, one), {d.minus, d.minus}));

    CHECK_THROWS_AS(polytope_of_unit(LaurentPoly::zero(2), one), InputError);
}

TEST_CASE("d_eval examples and additivity")
{
    IntegralPolytope origin = canonicalize(2, {{0, 0}});
    CHECK(d_eval({origin, origin}, {3, 5}) == Rational(0));

    Rng rng(38);
    for (int i = 0; i < 60; ++i) {
        const int dim = static_cast<int>(rng.uniform(1, 3));
        PolytopeDifference a{rng.polytope(dim, 4, 3), rng.polytope(dim, 4, 3)};
        PolytopeDifference b{rng.polytope(dim, 4, 3), rng.polytope(dim, 4, 3)};
        IVec phi(static_cast<std::size_t>(dim));
        for (auto& c : phi) c = rng.uniform(-3, 3);
        // Sum in the Grothendieck group is componentwise Minkowski sum.
        PolytopeDifference sum{minkowski_sum(a.plus, b.plus), minkowski_sum(a.minus, b.minus)};
        CHECK(d_eval(sum, phi) == d_eval(a, phi) + d_eval(b, phi));
    }
}

TEST_SUITE_END();
