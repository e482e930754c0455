/* Integral polytopes as canonical extreme-point sets, Minkowski sums, the
 * polytope Grothendieck group, and seminorm evaluation.
 *
 * Extreme-point detection is an exact rational linear-program feasibility
 * test (is a point a convex combination of the remaining points?) solved by
 * a small dense simplex with Bland's rule.  Ambient dimension is capped at 6;
 * candidate sets at this scale stay well below a few hundred points.
 */
#ifndef L2EULER_POLYTOPE_HPP
#define L2EULER_POLYTOPE_HPP

#include "l2euler/errors.hpp"
#include "l2euler/imat.hpp"
#include "l2euler/laurent.hpp"
#include "l2euler/rational.hpp"

#include <vector>

namespace l2euler {

constexpr int kMaxPolytopeDim = 6;

using LatticePoint = IVec;

class IntegralPolytope {
public:
    // Canonical extreme points of the convex hull of `points` (nonempty).
    static IntegralPolytope hull(int dim, std::vector<LatticePoint> points);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return verts_; }

    friend bool operator==(const IntegralPolytope& a, const IntegralPolytope& b)
    {
        return a.dim_ == b.dim_ && a.verts_ == b.verts_;
    }
    friend bool operator!=(const IntegralPolytope& a, const IntegralPolytope& b)
    {
        return !(a == b);
    }

    IntegralPolytope translated(const LatticePoint& by) const;
    IntegralPolytope negated() const;

private:
    IntegralPolytope(int dim, std::vector<LatticePoint> verts)
        : dim_(dim), verts_(std::move(verts))
    {
    }

    int dim_ = 0;
    std::vector<LatticePoint> verts_;
};

inline IntegralPolytope canonicalize(int dim, std::vector<LatticePoint> points)
{
    return IntegralPolytope::hull(dim, std::move(points));
}

IntegralPolytope minkowski_sum(const IntegralPolytope& p, const IntegralPolytope& q);

// (max phi(v) - min phi(v)) / 2 over the vertices.
Rational seminorm_eval(const IntegralPolytope& p, const IVec& phi);

struct PolytopeDifference {
    IntegralPolytope plus;
    IntegralPolytope minus;
};

// [a.plus] - [a.minus] = [b.plus] - [b.minus] iff a.plus + b.minus and
// b.plus + a.minus have equal canonical vertex sets.
bool difference_equal(const PolytopeDifference& a, const PolytopeDifference& b);

// [P(f)] - [P(g)] for a fraction f/g of nonzero Laurent polynomials;
// well-defined on the fraction since P is additive under products.
PolytopeDifference polytope_of_unit(const LaurentPoly& f, const LaurentPoly& g);

Rational d_eval(const PolytopeDifference& z, const IVec& phi);

IntegralPolytope newton_polytope(const LaurentPoly& f);

// Exact feasibility of sum(lambda_i q_i) = target, sum(lambda_i) = 1,
// lambda >= 0.  Exposed for tests.
bool in_convex_hull(const std::vector<LatticePoint>& generators, const LatticePoint& target);

}  // namespace l2euler

#endif
