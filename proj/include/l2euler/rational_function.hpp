/* The rational function field Q(t_1, ..., t_k) with a unique canonical form:
 * numerator and denominator coprime, denominator an integer-primitive
 * polynomial with positive graded-lex leading coefficient.  With that
 * normalization, structural equality is field equality.
 *
 * Monomial substitution t^v -> t^(M v) for an integer matrix M is the
 * automorphism backing the twisted Laurent layer; negative image exponents
 * are cleared by moving monomials between numerator and denominator.
 */
#ifndef L2EULER_RATIONAL_FUNCTION_HPP
#define L2EULER_RATIONAL_FUNCTION_HPP

#include "l2euler/imat.hpp"
#include "l2euler/laurent.hpp"
#include "l2euler/polynomial.hpp"

#include <string>

namespace l2euler {

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(Poly::one(0)) {}

    explicit RationalFunction(int nvars) : num_(nvars), den_(Poly::one(nvars)) {}

    RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den)
    {
        if (num_.nvars() != den_.nvars())
            throw InputError("rational function with mismatched variable counts");
        normalize();
    }

    static RationalFunction zero(int nvars) { return RationalFunction(nvars); }

    static RationalFunction constant(int nvars, const Rational& c)
    {
        return RationalFunction(Poly::constant(nvars, c), Poly::one(nvars));
    }

    static RationalFunction one(int nvars) { return constant(nvars, 1); }

    static RationalFunction from_poly(const Poly& p)
    {
        return RationalFunction(p, Poly::one(p.nvars()));
    }

    static RationalFunction variable(int nvars, int i)
    {
        return from_poly(Poly::variable(nvars, i));
    }

    // A Laurent monomial c * t^e as a fraction.
    static RationalFunction laurent_monomial(int nvars, const ExpVec& e, const Rational& c);

    // f / g for Laurent polynomials f, g (g nonzero); common monomial shifts
    // cancel in normalization, so the result depends only on the fraction.
    static RationalFunction from_laurent_fraction(const LaurentPoly& f, const LaurentPoly& g);

    int nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    // Sums and products keep operands in lowest terms and reduce across the
    // fraction before multiplying out, in the style of exact bignum rational
    // arithmetic; the results need no final gcd pass.
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction inverse() const
    {
        if (is_zero()) throw InputError("inverse of zero rational function");
        RationalFunction r(Tag::Reduced, den_, num_);
        r.fix_scale();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b)
    {
        return !(a == b);
    }

    // t^v -> t^(M v) on both numerator and denominator.
    RationalFunction substitute_monomial(const IMat& m) const;

    std::string str(const std::vector<std::string>& names) const;

    std::size_t bytes() const { return byte_size(num_) + byte_size(den_); }

private:
    enum class Tag { Reduced };

    // Already coprime; only the scale normalization is pending.
    RationalFunction(Tag, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    void check_vars(const RationalFunction& o) const
    {
        if (nvars() != o.nvars()) throw InputError("rational function variable count mismatch");
    }

    void normalize();
    void fix_scale();

    Poly num_, den_;
};

}  // namespace l2euler

#endif
