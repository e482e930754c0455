/* Smith normal form of integer matrices, exact over arbitrary-precision
 * integers, with both unimodular transforms returned.  Pivots are chosen by
 * minimal absolute value to keep intermediate entries small.
 */
#ifndef L2EULER_SNF_HPP
#define L2EULER_SNF_HPP

#include "l2euler/rational.hpp"

#include <cstddef>
#include <vector>

namespace l2euler {

using ZMat = std::vector<std::vector<Int>>;

struct SmithNormalForm {
    std::vector<Int> divisors;  // positive, d1 | d2 | ..., nonzero entries only
    ZMat left;                  // rows x rows, unimodular
    ZMat right;                 // cols x cols, unimodular
    // left * m * right is diagonal with `divisors` in the leading positions.
};

SmithNormalForm smith_normal_form(const ZMat& m);

ZMat zmat_mul(const ZMat& a, const ZMat& b);
Int zmat_det(const ZMat& m);

}  // namespace l2euler

#endif
