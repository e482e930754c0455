/* End-to-end computation of the twisted L2-Euler characteristic of a finite
 * presentation with respect to a supported quotient and a homomorphism to Z,
 * plus the closed-form cross-check formulas (Seifert pieces, JSJ additivity,
 * fibered and genus oracles, infinite cyclic covers).
 *
 * Boundary case (deficiency 1): delete one column of the Fox matrix at a
 * generator with infinite-order image, rewrite over the twisted Laurent ring
 * of the kernel splitting, and take minus the cokernel dimension plus the
 * absolute phi-value of the deleted generator.  Closed case (deficiency 0
 * with dual generators): additionally delete one row and add the dual term.
 * A non-surjective phi is first divided by its content; the result scales
 * linearly back.
 */
#ifndef L2EULER_EULER_HPP
#define L2EULER_EULER_HPP

#include "l2euler/polytope.hpp"
#include "l2euler/presentation.hpp"
#include "l2euler/reduction.hpp"

#include <array>
#include <optional>
#include <utility>

namespace l2euler {

struct PhiSpec {
    IVec covector;     // abelian case: length n
    long long c = 0;   // polyZ case: phi(v, m) = c * m

    static PhiSpec abelian(IVec cov) { return PhiSpec{std::move(cov), 0}; }
    static PhiSpec poly_z(long long c) { return PhiSpec{{}, c}; }
};

void validate_quotient(const Presentation& p, const QuotientSpec& q);

// Scaling reduction: phi = k * phi'' with phi'' of content one, k >= 1.
struct ReducedPhi {
    bool trivial = false;        // phi o mu == 0
    long long k = 1;             // content of phi; chi scales by k
    long long image_index = 0;   // [Z : im(phi o mu)], 0 when trivial
    PhiSpec primitive;           // phi / k (an arbitrary primitive phi when trivial)
};

ReducedPhi reduce_phi(const QuotientSpec& q, const PhiSpec& phi);

// The kernel splitting of a content-one phi: coefficient variables for the
// kernel lattice, the twist, and the induced ring map into the twisted
// Laurent ring.
class SplitData {
public:
    SplitData(const QuotientSpec& q, const PhiSpec& primitive_phi);

    const TwistPtr& twist() const { return twist_; }
    const IMat& basis_change() const { return basis_change_; }  // abelian case

    long long phi_of(const GroupElem& g) const;
    SkewLaurentPoly rewrite(const GroupRingElement& x) const;
    SkewMatrix rewrite_matrix(const std::vector<std::vector<GroupRingElement>>& m) const;

private:
    QuotientKind kind_;
    int rank_;
    long long c_sign_ = 1;  // polyZ: sign of the reduced c
    IMat basis_change_;     // abelian: unimodular U with phi * U = (0, ..., 0, 1)
    IMat basis_change_inv_;
    TwistPtr twist_;
};

struct Diagnostics {
    int deleted_column = -1;
    int deleted_row = -1;
    std::vector<long long> diagonal_degrees;
    long long scaling_k = 1;
    long long image_index = 0;
    bool trivial_phi_branch = false;
    // (column, row, chi) triples of the verification sweep; row is -1 in the
    // boundary case.
    std::vector<std::array<long long, 3>> sweep;
};

struct EulerResult {
    long long chi2 = 0;
    long long thurston_lower_bound = 0;  // -chi2
    Diagnostics diag;
};

struct PipelineOptions {
    bool all_columns = false;             // verify independence of the deletion
    std::optional<int> forced_column;
    std::optional<int> forced_row;
    DiagonalizeOptions diagonalize;
};

EulerResult chi2_boundary(const Presentation& p, const QuotientSpec& q, const PhiSpec& phi,
                          const PipelineOptions& opts = {});

EulerResult chi2_closed(const Presentation& p, const std::vector<FreeWord>& dual_generators,
                        const QuotientSpec& q, const PhiSpec& phi,
                        const PipelineOptions& opts = {});

// Minus the chi2 of the matching pipeline; a non-acyclic input propagates.
long long delta_invariant(const Presentation& p, const QuotientSpec& q, const PhiSpec& phi,
                          const std::vector<FreeWord>* dual_generators = nullptr,
                          const PipelineOptions& opts = {});

// (2 - 2g - b - sum(1 - 1/alpha_i)) * fiber_index.
Rational seifert_chi2(long long genus, long long boundary_count,
                      const std::vector<long long>& cone_orders, long long fiber_index);

EulerResult jsj_sum(const std::vector<EulerResult>& pieces);

long long thurston_from_genus(long long g);
long long fibered_norm(long long chi_fiber);
long long cover_scale(long long norm, long long sheets);
long long infinite_cyclic_chi2(long long dim_h1, bool has_boundary, long long k);

// Group ring of Z^n <-> Laurent polynomials.
LaurentPoly gre_to_laurent(const GroupRingElement& x);
GroupRingElement gre_from_laurent(const QuotientSpec& q, const LaurentPoly& f);

// A twisted Laurent element with identity twist, as a fraction of ordinary
// Laurent polynomials in (coefficient variables..., u).
std::pair<LaurentPoly, LaurentPoly> skew_to_laurent_fraction(const SkewLaurentPoly& x);

// Determinant over the commutative Laurent ring (identity twist context).
LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m);

struct FoxPolytopeResult {
    int deleted_column = -1;
    LaurentPoly determinant;       // of the deleted Fox matrix over Z[Z^n]
    IntegralPolytope polytope;     // its Newton polytope
    std::optional<Rational> seminorm;  // at the supplied covector, if any
};

// Abelian quotients only: the Newton polytope of the deleted Fox matrix
// determinant, with an optional seminorm evaluation.
FoxPolytopeResult fox_determinant_polytope(const Presentation& p, const QuotientSpec& q,
                                           const std::optional<IVec>& phi = std::nullopt);

}  // namespace l2euler

#endif
