/* Twisted Laurent polynomials D[u^{+-1}] with D = Q(t_1, ..., t_k) and the
 * twist u f u^{-1} = f(t -> t^A) for a unimodular integer matrix A.
 *
 * Multiplication follows u^m * f = twist^m(f) * u^m.  The coefficient field
 * is commutative; all noncommutativity lives in the twist.  Degree of a
 * nonzero element is the width n_+ - n_- of its u-support; it is additive
 * under multiplication and the ring has no zero divisors.
 */
#ifndef L2EULER_SKEW_HPP
#define L2EULER_SKEW_HPP

#include "l2euler/imat.hpp"
#include "l2euler/rational_function.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace l2euler {

class Twist {
public:
    // A must be unimodular so the substitution is a field automorphism.
    Twist(int k, IMat a, int memo_cap = 64) : k_(k), a_(std::move(a)), memo_cap_(memo_cap)
    {
        if (k_ < 0) throw InputError("negative variable count");
        if (static_cast<int>(a_.size()) != k_) throw InputError("twist matrix has wrong size");
        if (k_ > 0 && !imat_is_unimodular(a_)) throw InputError("twist matrix must be unimodular");
    }

    static std::shared_ptr<const Twist> identity(int k)
    {
        return std::make_shared<Twist>(k, imat_identity(static_cast<std::size_t>(k)));
    }

    static std::shared_ptr<const Twist> of(int k, const IMat& a, int memo_cap = 64)
    {
        return std::make_shared<Twist>(k, a, memo_cap);
    }

    int vars() const { return k_; }
    const IMat& matrix() const { return a_; }

    bool is_identity() const { return k_ == 0 || a_ == imat_identity(static_cast<std::size_t>(k_)); }

    // A^m, memoized for |m| <= memo_cap (fills idempotently, safe to share).
    IMat power(long long m) const
    {
        if (k_ == 0 || m == 0) return imat_identity(static_cast<std::size_t>(k_));
        if (m <= memo_cap_ && m >= -memo_cap_) {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(m);
            if (it != memo_.end()) return it->second;
            IMat p = imat_pow(a_, m);
            memo_.emplace(m, p);
            return p;
        }
        return imat_pow(a_, m);
    }

    friend bool operator==(const Twist& x, const Twist& y)
    {
        return x.k_ == y.k_ && x.a_ == y.a_;
    }

private:
    int k_;
    IMat a_;
    int memo_cap_;
    mutable std::map<long long, IMat> memo_;
    mutable std::mutex mu_;
};

using TwistPtr = std::shared_ptr<const Twist>;

// twist^m applied to a coefficient.
RationalFunction apply_twist(const Twist& t, long long m, const RationalFunction& f);

class SkewLaurentPoly {
public:
    SkewLaurentPoly() : twist_(Twist::identity(0)) {}
    explicit SkewLaurentPoly(TwistPtr twist) : twist_(std::move(twist)) {}

    static SkewLaurentPoly zero(TwistPtr twist) { return SkewLaurentPoly(std::move(twist)); }

    static SkewLaurentPoly one(TwistPtr twist)
    {
        return term(std::move(twist), 0, RationalFunction::one(0), true);
    }

    static SkewLaurentPoly term(TwistPtr twist, long long uexp, const RationalFunction& coeff,
                                bool allow_any_vars = false)
    {
        SkewLaurentPoly x(std::move(twist));
        if (!allow_any_vars && coeff.nvars() != x.twist_->vars())
            throw InputError("coefficient variable count does not match twist");
        RationalFunction c =
            coeff.nvars() == x.twist_->vars()
                ? coeff
                : RationalFunction::constant(x.twist_->vars(), coeff.constant_value());
        if (!c.is_zero()) x.coeffs_.emplace(uexp, std::move(c));
        return x;
    }

    static SkewLaurentPoly u_power(TwistPtr twist, long long m)
    {
        int k = twist->vars();
        return term(std::move(twist), m, RationalFunction::one(k));
    }

    const TwistPtr& twist() const { return twist_; }
    const std::map<long long, RationalFunction>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RationalFunction coeff(long long m) const
    {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? RationalFunction::zero(twist_->vars()) : it->second;
    }

    void add_term(long long m, const RationalFunction& c)
    {
        if (c.is_zero()) return;
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            coeffs_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    long long n_minus() const
    {
        if (is_zero()) throw InputError("u-support of zero element");
        return coeffs_.begin()->first;
    }

    long long n_plus() const
    {
        if (is_zero()) throw InputError("u-support of zero element");
        return coeffs_.rbegin()->first;
    }

    // n_+ - n_-; undefined (throws) on zero.
    long long degree() const { return n_plus() - n_minus(); }

    // Units are the single-term elements f * u^m, f != 0.
    bool is_unit() const { return coeffs_.size() == 1; }

    friend SkewLaurentPoly operator+(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
    {
        a.check_twist(b);
        SkewLaurentPoly r = a;
        for (const auto& [m, c] : b.coeffs_) r.add_term(m, c);
        return r;
    }

    friend SkewLaurentPoly operator-(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
    {
        a.check_twist(b);
        SkewLaurentPoly r = a;
        for (const auto& [m, c] : b.coeffs_) r.add_term(m, -c);
        return r;
    }

    SkewLaurentPoly operator-() const
    {
        SkewLaurentPoly r(twist_);
        for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
        return r;
    }

    // (c_a u^a)(c_b u^b) = c_a * twist^a(c_b) u^{a+b}
    friend SkewLaurentPoly operator*(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
    {
        a.check_twist(b);
        SkewLaurentPoly r(a.twist_);
        for (const auto& [ma, ca] : a.coeffs_)
            for (const auto& [mb, cb] : b.coeffs_)
                r.add_term(ma + mb, ca * apply_twist(*a.twist_, ma, cb));
        return r;
    }

    friend bool operator==(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
    {
        return *a.twist_ == *b.twist_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
    {
        return !(a == b);
    }

    std::size_t bytes() const
    {
        std::size_t total = 0;
        for (const auto& [m, c] : coeffs_) total += sizeof(m) + c.bytes();
        return total;
    }

    std::string str(const std::vector<std::string>& names, const std::string& uname = "u") const;

private:
    void check_twist(const SkewLaurentPoly& o) const
    {
        if (!(*twist_ == *o.twist_)) throw InputError("twist mismatch");
    }

    TwistPtr twist_;
    std::map<long long, RationalFunction> coeffs_;
};

// a = q * b + r with r = 0 or deg r < deg b (b nonzero).
std::pair<SkewLaurentPoly, SkewLaurentPoly> left_divmod(const SkewLaurentPoly& a,
                                                        const SkewLaurentPoly& b);

// a = b * q + r with r = 0 or deg r < deg b (b nonzero).
std::pair<SkewLaurentPoly, SkewLaurentPoly> right_divmod(const SkewLaurentPoly& a,
                                                         const SkewLaurentPoly& b);

// Pseudo-division variants: the dividend is scaled by a nonzero coefficient
// (a unit of the ring) instead of inverting the divisor's leading
// coefficient, so polynomial coefficients stay polynomial.
struct LeftPseudoDiv {
    RationalFunction scale;   // scale * a = quotient * b + remainder
    SkewLaurentPoly quotient;
    SkewLaurentPoly remainder;
};
LeftPseudoDiv left_pseudo_divmod(const SkewLaurentPoly& a, const SkewLaurentPoly& b);

struct RightPseudoDiv {
    RationalFunction scale;   // a * scale = b * quotient + remainder
    SkewLaurentPoly quotient;
    SkewLaurentPoly remainder;
};
RightPseudoDiv right_pseudo_divmod(const SkewLaurentPoly& a, const SkewLaurentPoly& b);

}  // namespace l2euler

#endif
