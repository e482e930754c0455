/* Sparse multivariate polynomials over the rationals and their gcd.
 *
 * The gcd follows the classical recursive scheme: pick a main variable,
 * split off contents, run a subresultant pseudo-remainder sequence on the
 * primitive parts, and recurse into the coefficient ring for the contents.
 * Everything is exact; the target scale is small (a handful of variables,
 * modest degrees), so no modular or heuristic shortcuts are attempted.
 */
#ifndef L2EULER_POLYNOMIAL_HPP
#define L2EULER_POLYNOMIAL_HPP

#include "l2euler/errors.hpp"
#include "l2euler/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace l2euler {

using ExpVec = std::vector<int>;

class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const Rational& c)
    {
        Poly p(nvars);
        if (c != 0) p.terms_[ExpVec(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }

    static Poly one(int nvars) { return constant(nvars, 1); }

    static Poly monomial(int nvars, const ExpVec& e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != nvars)
            throw InputError("monomial exponent vector has wrong length");
        for (int x : e)
            if (x < 0) throw InputError("ordinary polynomial with negative exponent");
        Poly p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static Poly variable(int nvars, int i, int power = 1)
    {
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = power;
        return monomial(nvars, e, 1);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == ExpVec(static_cast<std::size_t>(nvars_), 0));
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }

    Rational constant_value() const
    {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }

    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

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

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        a.check_vars(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b)
    {
        a.check_vars(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    Poly operator-() const
    {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_vars(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Poly& a, const Rational& c)
    {
        Poly r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, q] : a.terms_) r.terms_[e] = q * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Strict order used only to make Poly usable as a map key in callers.
    friend bool operator<(const Poly& a, const Poly& b)
    {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(int var) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;  // -1 for the zero polynomial
    }

    // Highest variable with positive degree, or -1 when constant.
    int main_variable() const
    {
        for (int v = nvars_ - 1; v >= 0; --v)
            if (degree_in(v) > 0) return v;
        return -1;
    }

    // Coefficient of var^d, as a polynomial in the same ambient variables.
    Poly coeff_in(int var, int d) const
    {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(var)] != d) continue;
            ExpVec f(e);
            f[static_cast<std::size_t>(var)] = 0;
            r.terms_[f] = c;
        }
        return r;
    }

    // Leading term in graded-lexicographic order.
    std::pair<ExpVec, Rational> grlex_lead() const
    {
        if (terms_.empty()) throw InputError("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return *best;
    }

    std::string str(const std::vector<std::string>& names) const;

    static bool grlex_less(const ExpVec& a, const ExpVec& b)
    {
        long sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    }

private:
    void check_vars(const Poly& o) const
    {
        if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
    }

    int nvars_;
    std::map<ExpVec, Rational> terms_;
};

// Rational content with the sign of the graded-lex leading coefficient:
// p / rational_content(p) has coprime integer coefficients and positive lead.
Rational rational_content(const Poly& p);

// p scaled to coprime integer coefficients with positive graded-lex lead.
Poly normalize_primitive(const Poly& p);

// Exact division; throws if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);

// Gcd, normalized via normalize_primitive.  Errors when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

std::size_t byte_size(const Poly& p);

}  // namespace l2euler

#endif
