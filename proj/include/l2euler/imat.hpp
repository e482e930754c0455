/* Small dense integer matrices: products, powers, determinants, exact
 * inverses of unimodular matrices.  Used for monomial twists, group
 * multiplication in poly-Z quotients, and unimodular basis changes.
 */
#ifndef L2EULER_IMAT_HPP
#define L2EULER_IMAT_HPP

#include "l2euler/errors.hpp"
#include "l2euler/rational.hpp"

#include <cstddef>
#include <vector>

namespace l2euler {

using IMat = std::vector<std::vector<long long>>;
using IVec = std::vector<long long>;

inline IMat imat_identity(std::size_t n)
{
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline bool imat_is_square(const IMat& m)
{
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

inline IMat imat_mul(const IMat& a, const IMat& b)
{
    const std::size_t n = a.size();
    IMat c(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline IVec imat_apply(const IMat& m, const IVec& v)
{
    IVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int imat_det(const IMat& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool imat_is_unimodular(const IMat& m)
{
    if (!imat_is_square(m)) return false;
    Int d = imat_det(m);
    return d == 1 || d == -1;
}

// Exact inverse of a unimodular integer matrix (the inverse is integral).
inline IMat imat_inverse_unimodular(const IMat& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw InputError("matrix is singular, expected unimodular");
        std::swap(a[c], a[p]);
        Rational piv = a[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[c][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IMat inv(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(a[i][n + j]))
                throw InputError("matrix inverse is not integral, expected unimodular");
            inv[i][j] = static_cast<long long>(rat_num(a[i][n + j]));
        }
    return inv;
}

// A^m for any sign of m (inverse must exist, i.e. A unimodular).
inline IMat imat_pow(const IMat& a, long long m)
{
    const std::size_t n = a.size();
    IMat base = m >= 0 ? a : imat_inverse_unimodular(a);
    IMat acc = imat_identity(n);
    for (long long i = 0, e = m >= 0 ? m : -m; i < e; ++i) acc = imat_mul(acc, base);
    return acc;
}

}  // namespace l2euler

#endif
