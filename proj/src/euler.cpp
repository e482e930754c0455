#include "l2euler/euler.hpp"

#include <algorithm>
#include <numeric>

namespace l2euler {

namespace {

long long llabs_(long long x) { return x < 0 ? -x : x; }

long long gcd_ll(long long a, long long b)
{
    a = llabs_(a);
    b = llabs_(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

void validate_quotient(const Presentation& p, const QuotientSpec& q)
{
    if (q.rank < 0) throw InputError("negative quotient rank");
    if (static_cast<int>(q.images.size()) != p.num_generators())
        throw InputError("quotient must supply one image per generator");
    for (const GroupElem& g : q.images)
        if (!q.conforms(g)) throw InputError("generator image does not conform to quotient");
    if (q.kind == QuotientKind::PolyZ) {
        if (static_cast<int>(q.twist_matrix.size()) != q.rank)
            throw InputError("polyZ twist matrix has wrong size");
        if (q.rank > 0 && !imat_is_unimodular(q.twist_matrix))
            throw InputError("polyZ twist matrix must be unimodular");
    }
    for (const FreeWord& r : p.relators)
        if (!q.is_identity(apply_quotient(q, r)))
            throw InputError("relator does not map to the identity in the quotient");
}

ReducedPhi reduce_phi(const QuotientSpec& q, const PhiSpec& phi)
{
    ReducedPhi out;
    long long content = 0;
    if (q.kind == QuotientKind::Abelian) {
        if (static_cast<int>(phi.covector.size()) != q.rank)
            throw InputError("phi covector length does not match quotient rank");
        for (long long c : phi.covector) content = gcd_ll(content, c);
    } else {
        if (!phi.covector.empty())
            throw InputError("polyZ phi is the map (v, m) -> c*m; supply c only");
        content = llabs_(phi.c);
    }

    PhiSpec primitive = phi;
    if (content > 1) {
        if (q.kind == QuotientKind::Abelian)
            for (auto& c : primitive.covector) c /= content;
        else
            primitive.c /= content;
    }

    // [Z : im(phi o mu)] via the primitive phi values on the generator images.
    long long image_gcd = 0;
    if (content != 0) {
        SplitData probe(q, primitive);
        for (const GroupElem& g : q.images) image_gcd = gcd_ll(image_gcd, probe.phi_of(g));
    }

    if (content == 0 || image_gcd == 0) {
        out.trivial = true;
        out.k = 1;
        out.image_index = 0;
        if (content != 0) {
            out.primitive = primitive;
        } else if (q.kind == QuotientKind::Abelian) {
            IVec e(static_cast<std::size_t>(q.rank), 0);
            if (!e.empty()) e.back() = 1;
            out.primitive = PhiSpec::abelian(std::move(e));
        } else {
            out.primitive = PhiSpec::poly_z(1);
        }
        return out;
    }
    out.k = content;
    out.image_index = content * image_gcd;
    out.primitive = std::move(primitive);
    return out;
}

SplitData::SplitData(const QuotientSpec& q, const PhiSpec& phi) : kind_(q.kind), rank_(q.rank)
{
    if (kind_ == QuotientKind::Abelian) {
        const int n = rank_;
        if (static_cast<int>(phi.covector.size()) != n)
            throw InputError("phi covector length does not match quotient rank");
        long long content = 0;
        for (long long c : phi.covector) content = gcd_ll(content, c);
        if (content != 1)
            throw InputError("splitting requires a content-one phi");
        // Unimodular U with phi * U = (0, ..., 0, 1): take the right Smith
        // transform of the 1 x n matrix phi and rotate its columns.
        ZMat row(1, std::vector<Int>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) row[0][static_cast<std::size_t>(i)] = phi.covector[static_cast<std::size_t>(i)];
        SmithNormalForm snf = smith_normal_form(row);
        // left is 1x1 = (+-1); fold its sign into the first column of right.
        const bool flip = snf.left[0][0] < 0;
        basis_change_.assign(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                Int value = snf.right[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (c == 0 && flip) value = -value;
                const int dest = c == 0 ? n - 1 : c - 1;
                basis_change_[static_cast<std::size_t>(r)][static_cast<std::size_t>(dest)] =
                    static_cast<long long>(value);
            }
        }
        basis_change_inv_ = imat_inverse_unimodular(basis_change_);
        twist_ = Twist::identity(n - 1);
    } else {
        if (phi.c != 1 && phi.c != -1)
            throw InputError("splitting requires a content-one phi");
        c_sign_ = phi.c;
        twist_ = Twist::of(rank_, c_sign_ == 1 ? q.twist_matrix
                                               : imat_inverse_unimodular(q.twist_matrix));
    }
}

long long SplitData::phi_of(const GroupElem& g) const
{
    if (kind_ == QuotientKind::Abelian) {
        IVec w = imat_apply(basis_change_inv_, g.v);
        return w.empty() ? 0 : w.back();
    }
    return c_sign_ * g.m;
}

SkewLaurentPoly SplitData::rewrite(const GroupRingElement& x) const
{
    SkewLaurentPoly out(twist_);
    const int k = twist_->vars();
    for (const auto& [g, c] : x.terms()) {
        ExpVec coeff_exp;
        long long uexp = 0;
        if (kind_ == QuotientKind::Abelian) {
            IVec w = imat_apply(basis_change_inv_, g.v);
            coeff_exp.assign(w.begin(), w.end() - 1);
            uexp = w.back();
        } else {
            coeff_exp.assign(g.v.begin(), g.v.end());
            uexp = c_sign_ * g.m;
        }
        out.add_term(uexp, RationalFunction::laurent_monomial(k, coeff_exp, c));
    }
    return out;
}

SkewMatrix SplitData::rewrite_matrix(const std::vector<std::vector<GroupRingElement>>& m) const
{
    SkewMatrix out;
    out.twist = twist_;
    out.rows = m.size();
    out.cols = m.empty() ? 0 : m[0].size();
    out.e.reserve(out.rows);
    for (const auto& row : m) {
        std::vector<SkewLaurentPoly> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(rewrite(x));
        out.e.push_back(std::move(r));
    }
    return out;
}

namespace {

struct Core {
    const Presentation& p;
    const QuotientSpec& q;
    PipelineOptions opts;
    ReducedPhi rphi;
    SplitData split;
    std::vector<std::vector<GroupRingElement>> fox;

    Core(const Presentation& pres, const QuotientSpec& quot, const PhiSpec& phi,
         const PipelineOptions& options)
        : p(pres), q(quot), opts(options), rphi(reduce_phi(quot, phi)),
          split(quot, rphi.primitive), fox(fox_matrix(pres, quot))
    {
    }

    std::vector<int> deletable_columns() const
    {
        std::vector<int> cols;
        for (int i = 0; i < p.num_generators(); ++i)
            if (q.has_infinite_order(q.image_of(i))) cols.push_back(i);
        if (cols.empty())
            throw InputError("no generator has infinite-order image in the quotient");
        return cols;
    }

    // Fox matrix with column `col` (and optionally row `row`) deleted,
    // rewritten over the twisted Laurent ring.
    SkewMatrix deleted_matrix(int col, int row = -1) const
    {
        std::vector<std::vector<GroupRingElement>> sub;
        for (int j = 0; j < p.num_relators(); ++j) {
            if (j == row) continue;
            std::vector<GroupRingElement> r;
            for (int i = 0; i < p.num_generators(); ++i) {
                if (i == col) continue;
                r.push_back(fox[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            }
            sub.push_back(std::move(r));
        }
        return split.rewrite_matrix(sub);
    }

    // -dim coker + boundary terms for one choice; nullopt when non-injective.
    std::optional<long long> chi_for(int col, int row, std::vector<long long>* degrees) const
    {
        SkewMatrix m = deleted_matrix(col, row);
        DiagonalizationResult d = diagonalize(m, opts.diagonalize);
        if (!d.injective) return std::nullopt;
        long long dim = 0;
        for (const auto& x : d.diagonal) dim += x.degree();
        if (degrees) *degrees = d.diagonal_degrees();
        long long chi = -dim + llabs_(split.phi_of(q.image_of(col)));
        return chi;
    }
};

void require_infinite_order_generator(const Presentation& p, const QuotientSpec& q)
{
    for (int i = 0; i < p.num_generators(); ++i)
        if (q.has_infinite_order(q.image_of(i))) return;
    throw InputError("no generator has infinite-order image in the quotient");
}

}  // namespace

EulerResult chi2_boundary(const Presentation& p, const QuotientSpec& q, const PhiSpec& phi,
                          const PipelineOptions& opts)
{
    p.validate();
    validate_quotient(p, q);
    if (p.deficiency() != 1)
        throw InputError("boundary pipeline requires deficiency 1 (a = b + 1)");
    require_infinite_order_generator(p, q);

    Core core(p, q, phi, opts);
    std::vector<int> cols = core.deletable_columns();
    int col = opts.forced_column.value_or(cols.front());
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
        throw InputError("requested column is not deletable (finite-order image)");

    EulerResult out;
    out.diag.scaling_k = core.rphi.k;
    out.diag.image_index = core.rphi.image_index;
    out.diag.deleted_column = col;

    if (core.rphi.trivial) {
        // phi o mu == 0: the invariant vanishes exactly when the covering is
        // L2-acyclic, certified by injectivity over the twisted ring.
        out.diag.trivial_phi_branch = true;
        SkewMatrix m = core.deleted_matrix(col);
        DiagonalizationResult d = diagonalize(m, opts.diagonalize);
        if (!d.injective)
            throw NonAcyclicError("covering is not L2-acyclic (trivial phi branch)");
        out.diag.diagonal_degrees = d.diagonal_degrees();
        out.chi2 = 0;
        out.thurston_lower_bound = 0;
        return out;
    }

    auto chi = core.chi_for(col, -1, &out.diag.diagonal_degrees);
    if (!chi) throw NonAcyclicError("covering is not L2-acyclic (matrix not injective)");
    out.chi2 = core.rphi.k * *chi;
    out.thurston_lower_bound = -out.chi2;

    if (opts.all_columns) {
        for (int c : cols) {
            auto sweep_chi = core.chi_for(c, -1, nullptr);
            if (!sweep_chi)
                throw NonAcyclicError("column sweep hit a non-injective deleted matrix");
            out.diag.sweep.push_back({c, -1, core.rphi.k * *sweep_chi});
            if (*sweep_chi != *chi)
                throw std::logic_error("chi2 depends on the deleted column");
        }
    }
    return out;
}

EulerResult chi2_closed(const Presentation& p, const std::vector<FreeWord>& dual_generators,
                        const QuotientSpec& q, const PhiSpec& phi, const PipelineOptions& opts)
{
    p.validate();
    validate_quotient(p, q);
    if (p.deficiency() != 0)
        throw InputError("closed pipeline requires equally many generators and relators");
    if (dual_generators.size() != static_cast<std::size_t>(p.num_relators()))
        throw InputError("closed pipeline requires one dual generator per relator");
    require_infinite_order_generator(p, q);

    Core core(p, q, phi, opts);
    std::vector<int> cols = core.deletable_columns();
    std::vector<int> rows;
    std::vector<GroupElem> dual_images;
    for (std::size_t j = 0; j < dual_generators.size(); ++j) {
        dual_images.push_back(apply_quotient(q, dual_generators[j]));
        if (q.has_infinite_order(dual_images.back())) rows.push_back(static_cast<int>(j));
    }
    if (rows.empty())
        throw InputError("no dual generator has infinite-order image in the quotient");

    int col = opts.forced_column.value_or(cols.front());
    int row = opts.forced_row.value_or(rows.front());
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
        throw InputError("requested column is not deletable (finite-order image)");
    if (std::find(rows.begin(), rows.end(), row) == rows.end())
        throw InputError("requested row is not deletable (finite-order dual image)");

    EulerResult out;
    out.diag.scaling_k = core.rphi.k;
    out.diag.image_index = core.rphi.image_index;
    out.diag.deleted_column = col;
    out.diag.deleted_row = row;

    auto chi_at = [&](int c, int r, std::vector<long long>* degrees) -> std::optional<long long> {
        auto base = core.chi_for(c, r, degrees);
        if (!base) return std::nullopt;
        return *base + llabs_(core.split.phi_of(dual_images[static_cast<std::size_t>(r)]));
    };

    if (core.rphi.trivial) {
        out.diag.trivial_phi_branch = true;
        SkewMatrix m = core.deleted_matrix(col, row);
        DiagonalizationResult d = diagonalize(m, opts.diagonalize);
        if (!d.injective)
            throw NonAcyclicError("covering is not L2-acyclic (trivial phi branch)");
        out.diag.diagonal_degrees = d.diagonal_degrees();
        out.chi2 = 0;
        out.thurston_lower_bound = 0;
        return out;
    }

    auto chi = chi_at(col, row, &out.diag.diagonal_degrees);
    if (!chi) throw NonAcyclicError("covering is not L2-acyclic (matrix not injective)");
    out.chi2 = core.rphi.k * *chi;
    out.thurston_lower_bound = -out.chi2;

    if (opts.all_columns) {
        for (int c : cols)
            for (int r : rows) {
                auto sweep_chi = chi_at(c, r, nullptr);
                if (!sweep_chi)
                    throw NonAcyclicError("sweep hit a non-injective deleted matrix");
                out.diag.sweep.push_back({c, r, core.rphi.k * *sweep_chi});
                if (*sweep_chi != *chi)
                    throw std::logic_error("chi2 depends on the deleted row/column pair");
            }
    }
    return out;
}

long long delta_invariant(const Presentation& p, const QuotientSpec& q, const PhiSpec& phi,
                          const std::vector<FreeWord>* dual_generators,
                          const PipelineOptions& opts)
{
    EulerResult r = dual_generators ? chi2_closed(p, *dual_generators, q, phi, opts)
                                    : chi2_boundary(p, q, phi, opts);
    return -r.chi2;
}

Rational seifert_chi2(long long genus, long long boundary_count,
                      const std::vector<long long>& cone_orders, long long fiber_index)
{
    if (genus < 0 || boundary_count < 0) throw InputError("negative base orbifold data");
    if (fiber_index < 1) throw InputError("fiber index must be at least 1");
    Rational chi_orb = Rational(2 - 2 * genus - boundary_count);
    for (long long a : cone_orders) {
        if (a < 1) throw InputError("cone order must be at least 1");
        chi_orb -= Rational(a - 1, a);
    }
    return chi_orb * fiber_index;
}

EulerResult jsj_sum(const std::vector<EulerResult>& pieces)
{
    if (pieces.empty()) throw InputError("JSJ sum of no pieces");
    EulerResult out;
    for (const EulerResult& r : pieces) out.chi2 += r.chi2;
    out.thurston_lower_bound = -out.chi2;
    return out;
}

long long thurston_from_genus(long long g)
{
    if (g < 0) throw InputError("negative genus");
    return std::max<long long>(2 * g - 1, 0);
}

long long fibered_norm(long long chi_fiber) { return std::max<long long>(-chi_fiber, 0); }

long long cover_scale(long long norm, long long sheets)
{
    if (sheets < 1) throw InputError("covering must have at least one sheet");
    return sheets * norm;
}

long long infinite_cyclic_chi2(long long dim_h1, bool has_boundary, long long k)
{
    if (dim_h1 < 0 || k < 0) throw InputError("negative input");
    return k * ((has_boundary ? 1 : 2) - dim_h1);
}

LaurentPoly gre_to_laurent(const GroupRingElement& x)
{
    if (x.kind() != QuotientKind::Abelian)
        throw InputError("Laurent form is defined for abelian quotients only");
    LaurentPoly out(x.rank());
    for (const auto& [g, c] : x.terms()) out.add_term(ExpVec(g.v.begin(), g.v.end()), c);
    return out;
}

GroupRingElement gre_from_laurent(const QuotientSpec& q, const LaurentPoly& f)
{
    if (q.kind != QuotientKind::Abelian)
        throw InputError("Laurent form is defined for abelian quotients only");
    if (f.nvars() != q.rank) throw InputError("variable count does not match quotient rank");
    GroupRingElement out(q.kind, q.rank);
    for (const auto& [e, c] : f.terms()) out.add_term(GroupElem{IVec(e.begin(), e.end()), 0}, c);
    return out;
}

std::pair<LaurentPoly, LaurentPoly> skew_to_laurent_fraction(const SkewLaurentPoly& x)
{
    if (!x.twist()->is_identity())
        throw InputError("Laurent fraction form requires the identity twist");
    const int k = x.twist()->vars();
    const int n = k + 1;  // u is the last variable
    auto widen = [&](const Poly& p, long long uexp) {
        LaurentPoly out(n);
        for (const auto& [e, c] : p.terms()) {
            ExpVec f(e);
            f.push_back(static_cast<int>(uexp));
            out.add_term(f, c);
        }
        return out;
    };
    LaurentPoly num = LaurentPoly::zero(n);
    LaurentPoly den = LaurentPoly::one(n);
    for (const auto& [m, c] : x.coeffs()) {
        // num/den += (c.num * u^m) / c.den
        LaurentPoly tn = widen(c.num(), m);
        LaurentPoly td = widen(c.den(), 0);
        num = num * td + tn * den;
        den = den * td;
    }
    return {num, den};
}

LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::one(0);
    const int vars = m[0][0].nvars();
    if (n == 1) return m[0][0];
    // Laplace expansion along the first row; fine at this scale.
    LaurentPoly det(vars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        LaurentPoly term = m[0][j] * laurent_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

FoxPolytopeResult fox_determinant_polytope(const Presentation& p, const QuotientSpec& q,
                                           const std::optional<IVec>& phi)
{
    p.validate();
    validate_quotient(p, q);
    if (q.kind != QuotientKind::Abelian)
        throw InputError("polytope command supports abelian quotients only");
    if (p.deficiency() != 1)
        throw InputError("polytope command requires deficiency 1");

    int col = -1;
    for (int i = 0; i < p.num_generators(); ++i)
        if (q.has_infinite_order(q.image_of(i))) {
            col = i;
            break;
        }
    if (col < 0) throw InputError("no generator has infinite-order image in the quotient");

    auto fox = fox_matrix(p, q);
    std::vector<std::vector<LaurentPoly>> sub;
    for (int j = 0; j < p.num_relators(); ++j) {
        std::vector<LaurentPoly> row;
        for (int i = 0; i < p.num_generators(); ++i) {
            if (i == col) continue;
            row.push_back(gre_to_laurent(fox[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
        }
        sub.push_back(std::move(row));
    }
    LaurentPoly det = sub.empty() ? LaurentPoly::one(q.rank) : laurent_det(sub);
    if (det.is_zero())
        throw NonAcyclicError("deleted Fox matrix has zero determinant");

    FoxPolytopeResult out{col, det, newton_polytope(det), std::nullopt};
    if (phi) {
        if (static_cast<int>(phi->size()) != q.rank)
            throw InputError("phi covector length does not match quotient rank");
        out.seminorm = seminorm_eval(out.polytope, *phi);
    }
    return out;
}

}  // namespace l2euler
