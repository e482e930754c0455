/* Sparse multivariate Laurent polynomials over the rationals.
 *
 * Supports are kept exactly as constructed; degree- and polytope-style
 * observations are invariant under monomial shifts, so no shift
 * normalization is applied.
 */
#ifndef L2EULER_LAURENT_HPP
#define L2EULER_LAURENT_HPP

#include "l2euler/errors.hpp"
#include "l2euler/polynomial.hpp"
#include "l2euler/rational.hpp"

#include <map>
#include <vector>

namespace l2euler {

class LaurentPoly {
public:
    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }

    static LaurentPoly constant(int nvars, const Rational& c)
    {
        LaurentPoly p(nvars);
        if (c != 0) p.terms_[ExpVec(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }

    static LaurentPoly one(int nvars) { return constant(nvars, 1); }

    static LaurentPoly monomial(int nvars, const ExpVec& e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != nvars)
            throw InputError("monomial exponent vector has wrong length");
        LaurentPoly p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static LaurentPoly variable(int nvars, int i, int power = 1)
    {
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = power;
        return monomial(nvars, e, 1);
    }

    static LaurentPoly from_poly(const Poly& p)
    {
        LaurentPoly r(p.nvars());
        for (const auto& [e, c] : p.terms()) r.terms_[e] = c;
        return r;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const ExpVec& e, const Rational& c)
    {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_vars(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_vars(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_vars(b);
        LaurentPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c)
    {
        LaurentPoly r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, q] : a.terms_) r.terms_[e] = q * c;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Componentwise minimum of the support exponents.
    ExpVec min_exponent() const
    {
        if (terms_.empty()) throw InputError("min exponent of zero Laurent polynomial");
        ExpVec m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }

    LaurentPoly shifted(const ExpVec& by) const
    {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            ExpVec f(e);
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += by[i];
            r.terms_[f] = c;
        }
        return r;
    }

    // Valid only when all exponents are nonnegative.
    Poly to_poly() const
    {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_vars(const LaurentPoly& o) const
    {
        if (nvars_ != o.nvars_) throw InputError("Laurent polynomial variable count mismatch");
    }

    int nvars_;
    std::map<ExpVec, Rational> terms_;
};

}  // namespace l2euler

#endif
