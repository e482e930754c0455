#include "l2euler/polynomial.hpp"

#include <sstream>

namespace l2euler {

Rational rational_content(const Poly& p)
{
    if (p.is_zero()) throw InputError("content of zero polynomial");
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = int_gcd(num_gcd, rat_num(c));
        den_lcm = int_lcm(den_lcm, rat_den(c));
    }
    Rational content(num_gcd, den_lcm);
    if (p.grlex_lead().second < 0) content = -content;
    return content;
}

Poly normalize_primitive(const Poly& p)
{
    if (p.is_zero()) return p;
    return p * (Rational(1) / rational_content(p));
}

Poly poly_divexact(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw InputError("division by zero polynomial");
    Poly q(a.nvars());
    Poly r = a;
    const auto [eb, cb] = b.grlex_lead();
    while (!r.is_zero()) {
        const auto [er, cr] = r.grlex_lead();
        ExpVec e(er);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= eb[i];
            if (e[i] < 0) throw InputError("inexact polynomial division");
        }
        Poly t = Poly::monomial(a.nvars(), e, cr / cb);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

bool poly_divides(const Poly& b, const Poly& a)
{
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    try {
        (void)poly_divexact(a, b);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

namespace {

// Pseudo-remainder of A by B in the variable `var`:
// lc(B)^(deg A - deg B + 1) * A  =  Q*B + prem.
Poly prem(const Poly& a, const Poly& b, int var)
{
    const int db = b.degree_in(var);
    Poly lcb = b.coeff_in(var, db);
    Poly r = a;
    long long e = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const int dr = r.degree_in(var);
        Poly lcr = r.coeff_in(var, dr);
        Poly shift = Poly::variable(a.nvars(), var, dr - db);
        r = lcb * r - lcr * shift * b;
        --e;
    }
    for (; e > 0; --e) r = r * lcb;
    return r;
}

Poly content_in(const Poly& p, int var);

Poly pp_in(const Poly& p, int var) { return poly_divexact(p, content_in(p, var)); }

Poly gcd_inner(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return Poly::one(a.nvars());

    int var = std::max(a.main_variable(), b.main_variable());
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // One input does not involve the top variable: the gcd lives in the
        // coefficient ring of the other.
        const Poly& flat = a.degree_in(var) == 0 ? a : b;
        const Poly& tall = a.degree_in(var) == 0 ? b : a;
        return gcd_inner(flat, content_in(tall, var));
    }

    Poly ca = content_in(a, var);
    Poly cb = content_in(b, var);
    Poly c = gcd_inner(ca, cb);
    Poly f = poly_divexact(a, ca);
    Poly g = poly_divexact(b, cb);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

    // Subresultant PRS on the primitive parts.
    Poly h = Poly::one(a.nvars());
    Poly lead = Poly::one(a.nvars());
    while (true) {
        const int delta = f.degree_in(var) - g.degree_in(var);
        Poly r = prem(f, g, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            g = Poly::one(a.nvars());
            break;
        }
        f = g;
        Poly divisor = lead;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        g = poly_divexact(r, divisor);
        lead = f.coeff_in(var, f.degree_in(var));
        if (delta > 0) {
            Poly num = lead;
            for (int i = 1; i < delta; ++i) num = num * lead;
            Poly den = Poly::one(a.nvars());
            for (int i = 1; i < delta; ++i) den = den * h;
            h = poly_divexact(num, den);
        }
    }
    return normalize_primitive(c * pp_in(g, var));
}

Poly content_in(const Poly& p, int var)
{
    Poly c = Poly::zero(p.nvars());
    for (int d = 0; d <= p.degree_in(var); ++d) {
        Poly cd = p.coeff_in(var, d);
        if (cd.is_zero()) continue;
        c = gcd_inner(c, cd);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace

namespace {

// gcd of a monomial with an arbitrary polynomial: the componentwise minimum
// exponent, unit coefficient.
Poly monomial_gcd(const Poly& mono, const Poly& other)
{
    ExpVec e = mono.terms().begin()->first;
    for (const auto& [f, c] : other.terms())
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], f[i]);
    return Poly::monomial(mono.nvars(), e, 1);
}

// ---- dense univariate fast path -------------------------------------------

int single_active_variable(const Poly& a, const Poly& b)
{
    int var = -1;
    for (int v = 0; v < a.nvars(); ++v) {
        if (a.degree_in(v) <= 0 && b.degree_in(v) <= 0) continue;
        if (var >= 0) return -2;  // more than one active variable
        var = v;
    }
    return var;  // -1 when both effectively constant
}

using Dense = std::vector<Int>;  // coefficient of x^i at index i, trimmed

void dense_trim(Dense& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_primitive(Dense p)
{
    Int g = 0;
    for (const Int& c : p) g = int_gcd(g, c);
    if (g > 1)
        for (Int& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
Dense dense_prem(Dense r, const Dense& b)
{
    const Int& lb = b.back();
    long long e = static_cast<long long>(r.size()) - static_cast<long long>(b.size()) + 1;
    while (!r.empty() && r.size() >= b.size()) {
        const Int lr = r.back();
        const std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < r.size(); ++i) r[i] *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
        dense_trim(r);
        --e;
    }
    if (e > 0) {
        Int f = 1;
        for (long long i = 0; i < e; ++i) f *= lb;
        for (Int& c : r) c *= f;
    }
    return r;
}

Dense dense_divexact(const Dense& a, const Int& d)
{
    Dense q = a;
    for (Int& c : q) c /= d;
    return q;
}

// Subresultant PRS on primitive integer polynomials.
Dense dense_gcd(Dense a, Dense b)
{
    a = dense_primitive(std::move(a));
    b = dense_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        if (b.empty()) return dense_primitive(std::move(a));
        if (b.size() == 1) return {Int(1)};
        const long long delta =
            static_cast<long long>(a.size()) - static_cast<long long>(b.size());
        Dense r = dense_prem(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
        } else {
            Int div = g;
            for (long long i = 0; i < delta; ++i) div *= h;
            b = dense_divexact(r, div);
        }
        g = a.back();
        if (delta > 0) {
            Int num = 1;
            for (long long i = 0; i < delta; ++i) num *= g;
            Int den = 1;
            for (long long i = 1; i < delta; ++i) den *= h;
            h = num / den;
        }
    }
}

Dense dense_from(const Poly& p, int var)
{
    Dense out(static_cast<std::size_t>(p.degree_in(var)) + 1, Int(0));
    Int den_lcm = 1;
    for (const auto& [e, c] : p.terms()) den_lcm = int_lcm(den_lcm, rat_den(c));
    for (const auto& [e, c] : p.terms())
        out[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] +=
            rat_num(c) * (den_lcm / rat_den(c));
    dense_trim(out);
    return out;
}

Poly dense_to_poly(const Dense& d, int nvars, int var)
{
    Poly p(nvars);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        ExpVec e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(var)] = static_cast<int>(i);
        p.add_term(e, Rational(d[i]));
    }
    return p;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.nvars() != b.nvars()) throw InputError("gcd of polynomials in different rings");
    if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) is undefined");
    if (!a.is_zero() && !b.is_zero()) {
        if (a.term_count() == 1) return monomial_gcd(a, b);
        if (b.term_count() == 1) return monomial_gcd(b, a);
        if (a == b) return normalize_primitive(a);
        const int var = single_active_variable(a, b);
        if (var >= 0)
            return dense_to_poly(dense_gcd(dense_from(a, var), dense_from(b, var)), a.nvars(),
                                 var);
    }
    return gcd_inner(a, b);
}

std::size_t byte_size(const Poly& p)
{
    std::size_t total = 0;
    for (const auto& [e, c] : p.terms()) total += e.size() * sizeof(int) + byte_size(c);
    return total;
}

std::string Poly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print highest graded-lex terms first.
    std::vector<const std::pair<const ExpVec, Rational>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* x, const auto* y) { return grlex_less(y->first, x->first); });
    for (const auto* t : ordered) {
        const auto& [e, c] = *t;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            any_var = true;
            mono << (i < names.size() ? names[i] : "t" + std::to_string(i));
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!any_var) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << mono.str();
        }
    }
    return out.str();
}

}  // namespace l2euler
