#include "l2euler/polytope.hpp"

#include <algorithm>

namespace l2euler {

namespace {

/* Phase-1 simplex over exact rationals with Bland's rule.
 *
 * Feasibility of  A x = b, x >= 0  for A (r x c), b >= 0: minimize the sum
 * of r artificial variables; feasible iff the optimum is zero.
 */
class ExactSimplex {
public:
    ExactSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size())
    {
        for (std::size_t i = 0; i < rows_; ++i)
            if (b[i] < 0) {
                for (auto& x : a[i]) x = -x;
                b[i] = -b[i];
            }
        // Tableau: columns [structural | artificial | rhs].
        t_.assign(rows_ + 1, std::vector<Rational>(cols_ + rows_ + 1, 0));
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t_[i][j] = a[i][j];
            t_[i][cols_ + i] = 1;
            t_[i][cols_ + rows_] = b[i];
            basis_[i] = cols_ + i;
        }
        // Objective row (negated reduced costs of "minimize sum of
        // artificials"): sum the constraint rows, then zero the entries of
        // the basic artificial columns to start in canonical form.
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= cols_ + rows_; ++j) t_[rows_][j] += t_[i][j];
        for (std::size_t i = 0; i < rows_; ++i) t_[rows_][cols_ + i] = 0;
    }

    bool feasible()
    {
        while (true) {
            // Bland: entering variable = lowest index with positive objective
            // coefficient (we maximize the negated artificial sum to zero).
            std::size_t enter = cols_ + rows_;
            for (std::size_t j = 0; j < cols_ + rows_; ++j)
                if (t_[rows_][j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_ + rows_) break;
            // Ratio test, ties by lowest basis index (Bland).
            std::size_t leave = rows_;
            Rational best = 0;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][cols_ + rows_] / t_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows_) return false;  // unbounded; cannot happen here
            pivot(leave, enter);
        }
        return t_[rows_][cols_ + rows_] == 0;
    }

private:
    void pivot(std::size_t r, std::size_t c)
    {
        Rational p = t_[r][c];
        for (auto& x : t_[r]) x /= p;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols_ + rows_; ++j) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool in_convex_hull(const std::vector<LatticePoint>& generators, const LatticePoint& target)
{
    if (generators.empty()) return false;
    const std::size_t d = target.size();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(generators.size()));
    std::vector<Rational> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < generators.size(); ++j) a[i][j] = generators[j][i];
        b[i] = target[i];
    }
    for (std::size_t j = 0; j < generators.size(); ++j) a[d][j] = 1;
    b[d] = 1;
    return ExactSimplex(std::move(a), std::move(b)).feasible();
}

IntegralPolytope IntegralPolytope::hull(int dim, std::vector<LatticePoint> points)
{
    if (points.empty()) throw InputError("polytope from empty point set");
    if (dim < 0 || dim > kMaxPolytopeDim)
        throw InputError("ambient dimension out of supported range [0, 6]");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw InputError("lattice point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Drop points that are convex combinations of the rest; removing a
    // non-extreme point never changes the hull.
    std::vector<LatticePoint> work = points;
    std::size_t i = 0;
    while (i < work.size() && work.size() > 1) {
        std::vector<LatticePoint> others;
        others.reserve(work.size() - 1);
        for (std::size_t j = 0; j < work.size(); ++j)
            if (j != i) others.push_back(work[j]);
        if (in_convex_hull(others, work[i]))
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return IntegralPolytope(dim, std::move(work));
}

IntegralPolytope IntegralPolytope::translated(const LatticePoint& by) const
{
    std::vector<LatticePoint> pts = verts_;
    for (auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += by[i];
    std::sort(pts.begin(), pts.end());
    return IntegralPolytope(dim_, std::move(pts));
}

IntegralPolytope IntegralPolytope::negated() const
{
    std::vector<LatticePoint> pts = verts_;
    for (auto& p : pts)
        for (auto& x : p) x = -x;
    std::sort(pts.begin(), pts.end());
    return IntegralPolytope(dim_, std::move(pts));
}

IntegralPolytope minkowski_sum(const IntegralPolytope& p, const IntegralPolytope& q)
{
    if (p.dim() != q.dim()) throw InputError("Minkowski sum dimension mismatch");
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) {
            LatticePoint s(a);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            sums.push_back(std::move(s));
        }
    return IntegralPolytope::hull(p.dim(), std::move(sums));
}

Rational seminorm_eval(const IntegralPolytope& p, const IVec& phi)
{
    if (static_cast<int>(phi.size()) != p.dim())
        throw InputError("covector length does not match polytope dimension");
    Int lo = 0, hi = 0;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Int dot = 0;
        for (std::size_t i = 0; i < v.size(); ++i) dot += Int(phi[i]) * v[i];
        if (first) {
            lo = hi = dot;
            first = false;
        } else {
            if (dot < lo) lo = dot;
            if (dot > hi) hi = dot;
        }
    }
    return Rational(hi - lo, 2);
}

bool difference_equal(const PolytopeDifference& a, const PolytopeDifference& b)
{
    if (a.plus.dim() != b.plus.dim()) throw InputError("polytope difference dimension mismatch");
    return minkowski_sum(a.plus, b.minus) == minkowski_sum(b.plus, a.minus);
}

IntegralPolytope newton_polytope(const LaurentPoly& f)
{
    if (f.is_zero()) throw InputError("Newton polytope of zero polynomial");
    std::vector<LatticePoint> pts;
    pts.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) pts.emplace_back(e.begin(), e.end());
    return IntegralPolytope::hull(f.nvars(), std::move(pts));
}

PolytopeDifference polytope_of_unit(const LaurentPoly& f, const LaurentPoly& g)
{
    if (f.is_zero() || g.is_zero())
        throw InputError("polytope of a unit requires nonzero numerator and denominator");
    return PolytopeDifference{newton_polytope(f), newton_polytope(g)};
}

Rational d_eval(const PolytopeDifference& z, const IVec& phi)
{
    return seminorm_eval(z.plus, phi) - seminorm_eval(z.minus, phi);
}

}  // namespace l2euler
