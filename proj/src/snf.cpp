#include "l2euler/snf.hpp"

#include "l2euler/errors.hpp"

#include <algorithm>

namespace l2euler {

ZMat zmat_mul(const ZMat& a, const ZMat& b)
{
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    const std::size_t k = b.size();
    ZMat c(n, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            if (a[i][p] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][p] * b[p][j];
        }
    return c;
}

Int zmat_det(const ZMat& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    ZMat a = m;
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

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
    ZMat a;
    ZMat left, right;
    std::size_t rows, cols;

    explicit Worker(const ZMat& m) : a(m), rows(m.size()), cols(m.empty() ? 0 : m[0].size())
    {
        for (const auto& r : m)
            if (r.size() != cols) throw InputError("ragged matrix");
        left.assign(rows, std::vector<Int>(rows, 0));
        right.assign(cols, std::vector<Int>(cols, 0));
        for (std::size_t i = 0; i < rows; ++i) left[i][i] = 1;
        for (std::size_t j = 0; j < cols; ++j) right[j][j] = 1;
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(left[i], left[j]);
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : right) std::swap(row[i], row[j]);
    }

    // row i -= q * row j
    void row_axpy(std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
        for (std::size_t c = 0; c < rows; ++c) left[i][c] -= q * left[j][c];
    }

    // col i -= q * col j
    void col_axpy(std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
        for (std::size_t r = 0; r < cols; ++r) right[r][i] -= q * right[r][j];
    }

    void negate_row(std::size_t i)
    {
        for (auto& x : a[i]) x = -x;
        for (auto& x : left[i]) x = -x;
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = int_abs(a[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run()
    {
        const std::size_t steps = std::min(rows, cols);
        for (std::size_t t = 0; t < steps; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            // Reduce the cross until the pivot divides everything in it.
            while (true) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (a[i][t] == 0) continue;
                    Int q = div_round(a[i][t], a[t][t]);
                    row_axpy(i, t, q);
                    if (a[i][t] != 0) {
                        swap_rows(t, i);  // strictly smaller remainder becomes pivot
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[t][j] == 0) continue;
                    Int q = div_round(a[t][j], a[t][t]);
                    col_axpy(j, t, q);
                    if (a[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            // Enforce divisibility of the remaining block by the pivot.
            bool redo = false;
            for (std::size_t i = t + 1; i < rows && !redo; ++i)
                for (std::size_t j = t + 1; j < cols && !redo; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_axpy(t, i, Int(-1));  // add row i into row t
                        redo = true;
                    }
            if (redo) {
                --t;
                continue;
            }
            if (a[t][t] < 0) negate_row(t);
        }
    }

    // Quotient that leaves remainder of minimal absolute value.
    static Int div_round(const Int& x, const Int& d)
    {
        Int q = x / d;
        Int r = x - q * d;
        if (int_abs(r) * 2 > int_abs(d)) q += (r < 0) == (d < 0) ? 1 : -1;
        return q;
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const ZMat& m)
{
    Worker w(m);
    w.run();
    SmithNormalForm out;
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    for (std::size_t t = 0; t < std::min(w.rows, w.cols); ++t) {
        if (w.a[t][t] == 0) break;
        out.divisors.push_back(w.a[t][t]);
    }
    return out;
}

}  // namespace l2euler
