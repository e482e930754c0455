#include "l2euler/rational_function.hpp"

namespace l2euler {

void RationalFunction::normalize()
{
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(nvars());
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    fix_scale();
}

void RationalFunction::fix_scale()
{
    if (num_.is_zero()) {
        den_ = Poly::one(nvars());
        return;
    }
    Rational c = rational_content(den_);
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    a.check_vars(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one())
        return RationalFunction(RationalFunction::Tag::Reduced, a.num_ + b.num_,
                                Poly::one(a.nvars()));
    Poly d = poly_gcd(a.den_, b.den_);
    RationalFunction r(a.nvars());
    if (d.is_constant()) {
        // Coprime denominators: numerator and denominator share no factor.
        r = RationalFunction(RationalFunction::Tag::Reduced,
                             a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    } else {
        Poly da = poly_divexact(a.den_, d);
        Poly db = poly_divexact(b.den_, d);
        Poly t = a.num_ * db + b.num_ * da;
        if (t.is_zero()) return RationalFunction::zero(a.nvars());
        Poly g2 = poly_gcd(t, d);
        if (g2.is_constant()) {
            r = RationalFunction(RationalFunction::Tag::Reduced, std::move(t), da * b.den_);
        } else {
            r = RationalFunction(RationalFunction::Tag::Reduced, poly_divexact(t, g2),
                                 da * poly_divexact(b.den_, g2));
        }
    }
    r.fix_scale();
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    a.check_vars(b);
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.nvars());
    Poly an = a.num_, bd = b.den_;
    Poly bn = b.num_, ad = a.den_;
    if (!bd.is_constant()) {
        Poly g = poly_gcd(an, bd);
        if (!g.is_constant()) {
            an = poly_divexact(an, g);
            bd = poly_divexact(bd, g);
        }
    }
    if (!ad.is_constant()) {
        Poly g = poly_gcd(bn, ad);
        if (!g.is_constant()) {
            bn = poly_divexact(bn, g);
            ad = poly_divexact(ad, g);
        }
    }
    RationalFunction r(RationalFunction::Tag::Reduced, an * bn, ad * bd);
    r.fix_scale();
    return r;
}

RationalFunction RationalFunction::laurent_monomial(int nvars, const ExpVec& e, const Rational& c)
{
    ExpVec pos(e.size(), 0), neg(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= 0)
            pos[i] = e[i];
        else
            neg[i] = -e[i];
    }
    return RationalFunction(Poly::monomial(nvars, pos, c), Poly::monomial(nvars, neg, 1));
}

RationalFunction RationalFunction::from_laurent_fraction(const LaurentPoly& f, const LaurentPoly& g)
{
    if (g.is_zero()) throw InputError("Laurent fraction with zero denominator");
    const int n = f.nvars();
    if (f.is_zero()) return zero(n);
    ExpVec mf = f.min_exponent();
    ExpVec mg = g.min_exponent();
    ExpVec shift(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] = std::max(0, -std::min(mf[i], mg[i]));
    return RationalFunction(f.shifted(shift).to_poly(), g.shifted(shift).to_poly());
}

RationalFunction RationalFunction::substitute_monomial(const IMat& m) const
{
    const int n = nvars();
    if (n == 0 || is_zero()) return *this;
    auto subst = [&](const Poly& p) {
        LaurentPoly out(n);
        for (const auto& [e, c] : p.terms()) {
            IVec v(e.begin(), e.end());
            IVec w = imat_apply(m, v);
            ExpVec f(w.begin(), w.end());
            out.add_term(f, c);
        }
        return out;
    };
    // A monomial substitution is a Laurent-ring automorphism, so a coprime
    // pair stays coprime up to monomial factors; shifting the joint support
    // to minimum zero per variable removes those, and no gcd is needed.
    LaurentPoly ln = subst(num_);
    LaurentPoly ld = subst(den_);
    ExpVec mn = ln.min_exponent();
    ExpVec md = ld.min_exponent();
    ExpVec shift(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -std::min(mn[i], md[i]);
    RationalFunction r(Tag::Reduced, ln.shifted(shift).to_poly(), ld.shifted(shift).to_poly());
    r.fix_scale();
    return r;
}

std::string RationalFunction::str(const std::vector<std::string>& names) const
{
    if (den_.is_one()) return num_.str(names);
    std::string n = num_.str(names);
    std::string d = den_.str(names);
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const
{
    if (is_zero()) return "0";
    ExpVec m = min_exponent();
    ExpVec shift(m.size(), 0);
    bool needs_shift = false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0) {
            shift[i] = -m[i];
            needs_shift = true;
        }
    if (!needs_shift) return to_poly().str(names);
    std::string mono;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        if (shift[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (i < names.size() ? names[i] : "t" + std::to_string(i));
        if (shift[i] != 1) mono += "^" + std::to_string(shift[i]);
    }
    return "(" + shifted(shift).to_poly().str(names) + ")/(" + mono + ")";
}

}  // namespace l2euler
