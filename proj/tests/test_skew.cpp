#include "l2euler/skew.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace l2euler;
using testutil::Rng;

TEST_SUITE_BEGIN("skew");

namespace {

std::vector<TwistPtr> sample_twists()
{
    return {
        Twist::identity(0),
        Twist::of(1, {{1}}),
        testutil::klein_twist(),
        Twist::identity(2),
        Twist::of(2, {{1, 1}, {0, 1}}),
        Twist::of(2, {{0, 1}, {1, 0}}),
    };
}

}  // namespace

TEST_CASE("apply_twist defining actions")
{
    // k = 1, A = (-1): t goes to 1/t.
    TwistPtr k = testutil::klein_twist();
    RationalFunction t = RationalFunction::variable(1, 0);
    CHECK(apply_twist(*k, 1, t) == t.inverse());
    CHECK(apply_twist(*k, 2, t) == t);

    // Constants are fixed.
    CHECK(apply_twist(*k, 5, RationalFunction::constant(1, Rational(3, 7))) ==
          RationalFunction::constant(1, Rational(3, 7)));

    // k = 2, A = [[1,1],[0,1]]: t1*t2 has exponent (1,1) -> A(1,1) = (2,1).
    TwistPtr u = Twist::of(2, {{1, 1}, {0, 1}});
    RationalFunction t1 = RationalFunction::variable(2, 0);
    RationalFunction t2 = RationalFunction::variable(2, 1);
    CHECK(apply_twist(*u, 1, t1 * t2) == t1 * t1 * t2);
}

TEST_CASE("apply_twist is a field automorphism with composing powers")
{
    Rng rng(21);
    for (const TwistPtr& tw : sample_twists()) {
        for (int i = 0; i < 10; ++i) {
            RationalFunction f = rng.rf(tw->vars());
            RationalFunction g = rng.rf(tw->vars());
            const long long m1 = rng.uniform(-3, 3);
            const long long m2 = rng.uniform(-3, 3);
            CHECK(apply_twist(*tw, 0, f) == f);
            CHECK(apply_twist(*tw, m1, f + g) ==
                  apply_twist(*tw, m1, f) + apply_twist(*tw, m1, g));
            CHECK(apply_twist(*tw, m1, f * g) ==
                  apply_twist(*tw, m1, f) * apply_twist(*tw, m1, g));
            CHECK(apply_twist(*tw, m1 + m2, f) ==
                  apply_twist(*tw, m1, apply_twist(*tw, m2, f)));
        }
    }
}

TEST_CASE("skew multiplication examples")
{
    // Klein-bottle-type twist: (t + u)^2 = t^2 + (t + 1/t) u + u^2.
    TwistPtr k = testutil::klein_twist();
    RationalFunction t = RationalFunction::variable(1, 0);
    SkewLaurentPoly x = SkewLaurentPoly::term(k, 0, t) + SkewLaurentPoly::u_power(k, 1);
    SkewLaurentPoly sq = x * x;
    CHECK(sq.coeff(0) == t * t);
    CHECK(sq.coeff(1) == t + t.inverse());
    CHECK(sq.coeff(2) == RationalFunction::one(1));

    // Unit law.
    Rng rng(22);
    for (const TwistPtr& tw : sample_twists()) {
        SkewLaurentPoly y = rng.skew(tw, 2, 3);
        CHECK(y * SkewLaurentPoly::one(tw) == y);
        CHECK(SkewLaurentPoly::one(tw) * y == y);
    }

    // Twist mismatch is rejected.
    CHECK_THROWS_AS(SkewLaurentPoly::one(k) * SkewLaurentPoly::one(Twist::of(1, {{1}})),
                    InputError);
}

TEST_CASE("skew multiplication is associative")
{
    Rng rng(23);
    auto twists = sample_twists();
    for (int i = 0; i < 100; ++i) {
        const TwistPtr& tw = twists[static_cast<std::size_t>(i) % twists.size()];
        SkewLaurentPoly x = rng.skew(tw, 2, 2);
        SkewLaurentPoly y = rng.skew(tw, 2, 2);
        SkewLaurentPoly z = rng.skew(tw, 2, 2);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("degree examples and additivity")
{
    TwistPtr tw = Twist::identity(0);
    // 3u^2 + u^-1 has degree 3.
    SkewLaurentPoly x = SkewLaurentPoly::term(tw, 2, RationalFunction::constant(0, 3)) +
                        SkewLaurentPoly::u_power(tw, -1);
    CHECK(x.degree() == 3);
    CHECK(SkewLaurentPoly::term(tw, 0, RationalFunction::constant(0, 5)).degree() == 0);
    CHECK_THROWS_AS(SkewLaurentPoly::zero(tw).degree(), InputError);

    Rng rng(24);
    auto twists = sample_twists();
    for (int i = 0; i < 100; ++i) {
        const TwistPtr& t = twists[static_cast<std::size_t>(i) % twists.size()];
        SkewLaurentPoly a = rng.skew(t, 2, 3);
        SkewLaurentPoly b = rng.skew(t, 2, 3);
        CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK_FALSE((a * b).is_zero());  // no zero divisors
    }
}

TEST_CASE("conjugation by u applies the twist to coefficients")
{
    Rng rng(25);
    for (const TwistPtr& tw : sample_twists()) {
        for (int i = 0; i < 10; ++i) {
            RationalFunction f = rng.rf(tw->vars());
            SkewLaurentPoly c = SkewLaurentPoly::term(tw, 0, f);
            SkewLaurentPoly conj = SkewLaurentPoly::u_power(tw, 1) * c *
                                   SkewLaurentPoly::u_power(tw, -1);
            CHECK(conj == SkewLaurentPoly::term(tw, 0, apply_twist(*tw, 1, f)));
        }
    }
}

TEST_CASE("degree is invariant under multiplication by units")
{
    Rng rng(26);
    auto twists = sample_twists();
    for (int i = 0; i < 60; ++i) {
        const TwistPtr& tw = twists[static_cast<std::size_t>(i) % twists.size()];
        SkewLaurentPoly x = rng.skew(tw, 2, 3);
        SkewLaurentPoly unit = SkewLaurentPoly::term(tw, rng.uniform(-2, 2), rng.rf(tw->vars()));
        CHECK((unit * x).degree() == x.degree());
        CHECK((x * unit).degree() == x.degree());
    }
}

TEST_CASE("left and right division identities")
{
    Rng rng(27);
    auto twists = sample_twists();
    for (int i = 0; i < 60; ++i) {
        const TwistPtr& tw = twists[static_cast<std::size_t>(i) % twists.size()];
        SkewLaurentPoly a = rng.skew(tw, 3, 3);
        SkewLaurentPoly b = rng.skew(tw, 2, 2);
        auto [ql, rl] = left_divmod(a, b);
        CHECK(a == ql * b + rl);
        if (!rl.is_zero()) CHECK(rl.degree() < b.degree());
        auto [qr, rr] = right_divmod(a, b);
        CHECK(a == b * qr + rr);
        if (!rr.is_zero()) CHECK(rr.degree() < b.degree());

        LeftPseudoDiv lp = left_pseudo_divmod(a, b);
        CHECK(SkewLaurentPoly::term(tw, 0, lp.scale) * a == lp.quotient * b + lp.remainder);
        RightPseudoDiv rp = right_pseudo_divmod(a, b);
        CHECK(a * SkewLaurentPoly::term(tw, 0, rp.scale) == b * rp.quotient + rp.remainder);
    }
    CHECK_THROWS_AS(left_divmod(SkewLaurentPoly::one(twists[0]), SkewLaurentPoly::zero(twists[0])),
                    InputError);
}

TEST_CASE("twist power memoization is consistent")
{
    TwistPtr tw = Twist::of(2, {{1, 1}, {0, 1}}, 4);  // small memo cap
    for (long long m = -6; m <= 6; ++m) CHECK(tw->power(m) == imat_pow(tw->matrix(), m));
    CHECK_THROWS_AS(Twist::of(2, {{1, 1}, {1, 1}}), InputError);  // det 0
}

TEST_SUITE_END();
