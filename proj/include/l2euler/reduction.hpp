/* Matrix algebra over the twisted Laurent ring: diagonalization by
 * elementary operations, injectivity, cokernel dimension over the
 * coefficient field, and the Dieudonne determinant class.
 *
 * Matrices act by right multiplication on row vectors, so the image is the
 * span of the rows under left coefficients.  The image-preserving operations
 * are therefore: swapping rows/columns, adding a left multiple of a row to
 * another row, adding a right multiple of a column to another column, and
 * scaling a row on the left / a column on the right by a unit f*u^m.
 */
#ifndef L2EULER_REDUCTION_HPP
#define L2EULER_REDUCTION_HPP

#include "l2euler/skew.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace l2euler {

struct SkewMatrix {
    TwistPtr twist;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<SkewLaurentPoly>> e;

    static SkewMatrix zero(TwistPtr twist, std::size_t rows, std::size_t cols)
    {
        SkewMatrix m;
        m.twist = twist;
        m.rows = rows;
        m.cols = cols;
        m.e.assign(rows, std::vector<SkewLaurentPoly>(cols, SkewLaurentPoly::zero(twist)));
        return m;
    }

    static SkewMatrix identity(TwistPtr twist, std::size_t n)
    {
        SkewMatrix m = zero(twist, n, n);
        for (std::size_t i = 0; i < n; ++i) m.e[i][i] = SkewLaurentPoly::one(twist);
        return m;
    }

    bool square() const { return rows == cols; }
    std::size_t bytes() const;
};

struct ElementaryOp {
    enum class Kind {
        SwapRows,
        SwapCols,
        RowAddLeftMul,   // row i += q * row j
        ColAddRightMul,  // col i += col j * q
        RowScaleLeft,    // row i = q * row i, q a unit
        ColScaleRight,   // col i = col i * q, q a unit
    };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    SkewLaurentPoly q;
};

void apply_op(SkewMatrix& m, const ElementaryOp& op);

enum class PivotStrategy { MinDegree, FirstNonzero };

struct DiagonalizeOptions {
    PivotStrategy pivot = PivotStrategy::MinDegree;
    std::size_t size_guard_bytes = std::size_t(1) << 26;  // 64 MiB
    bool log_ops = true;
};

struct DiagonalizationResult {
    std::vector<SkewLaurentPoly> diagonal;  // zero entries mark non-injectivity
    bool injective = false;
    std::optional<SkewLaurentPoly> det_class;  // product of diagonal, when injective
    std::vector<ElementaryOp> op_log;

    std::vector<long long> diagonal_degrees() const
    {
        std::vector<long long> d;
        d.reserve(diagonal.size());
        for (const auto& x : diagonal) d.push_back(x.is_zero() ? -1 : x.degree());
        return d;
    }
};

DiagonalizationResult diagonalize(const SkewMatrix& m, const DiagonalizeOptions& opts = {});

// Sum of diagonal degrees when injective, nullopt otherwise.
std::optional<long long> coker_dim(const SkewMatrix& m, const DiagonalizeOptions& opts = {});

struct DieudonneDet {
    SkewLaurentPoly det_class;  // defined up to units f*u^m and commutators
    long long degree = 0;       // equals the cokernel dimension
};

// Throws NonAcyclicError when the matrix is not injective.
DieudonneDet dieudonne_det(const SkewMatrix& m, const DiagonalizeOptions& opts = {});

struct IkBoundReport {
    std::size_t k = 0;
    std::size_t n = 0;
    bool injective = false;
    long long coker_dimension = -1;  // valid when injective
    bool bound_holds = false;        // injective implies dimension <= k
};

// Builds A + u * I_k^n for an n x n matrix A over the coefficient field and
// checks the cokernel bound.  A genuine violation throws std::logic_error.
IkBoundReport ik_bound_check(const std::vector<std::vector<RationalFunction>>& a, std::size_t k,
                             std::size_t n, TwistPtr twist);

}  // namespace l2euler

#endif
