#include "l2euler/skew.hpp"

#include <sstream>

namespace l2euler {

RationalFunction apply_twist(const Twist& t, long long m, const RationalFunction& f)
{
    if (m == 0 || t.vars() == 0 || t.is_identity() || f.is_constant()) return f;
    return f.substitute_monomial(t.power(m));
}

std::pair<SkewLaurentPoly, SkewLaurentPoly> left_divmod(const SkewLaurentPoly& a,
                                                        const SkewLaurentPoly& b)
{
    if (b.is_zero()) throw InputError("division by zero twisted polynomial");
    const Twist& tw = *a.twist();
    SkewLaurentPoly q(a.twist());
    SkewLaurentPoly r = a;
    const long long degb = b.degree();
    const long long s = b.n_plus();
    const RationalFunction binv = b.coeff(s).inverse();
    while (!r.is_zero() && r.degree() >= degb) {
        const long long p = r.n_plus();
        // qt * b has top term exactly r's: qt = alpha twist^{p-s}(beta^{-1}) u^{p-s}.
        RationalFunction c = r.coeff(p) * apply_twist(tw, p - s, binv);
        SkewLaurentPoly qt = SkewLaurentPoly::term(a.twist(), p - s, c);
        q = q + qt;
        r = r - qt * b;
    }
    return {q, r};
}

std::pair<SkewLaurentPoly, SkewLaurentPoly> right_divmod(const SkewLaurentPoly& a,
                                                         const SkewLaurentPoly& b)
{
    if (b.is_zero()) throw InputError("division by zero twisted polynomial");
    const Twist& tw = *a.twist();
    SkewLaurentPoly q(a.twist());
    SkewLaurentPoly r = a;
    const long long degb = b.degree();
    const long long s = b.n_plus();
    const RationalFunction binv = b.coeff(s).inverse();
    while (!r.is_zero() && r.degree() >= degb) {
        const long long p = r.n_plus();
        // b * qt has top term exactly r's: qt = twist^{-s}(beta^{-1} alpha) u^{p-s}.
        RationalFunction c = apply_twist(tw, -s, binv * r.coeff(p));
        SkewLaurentPoly qt = SkewLaurentPoly::term(a.twist(), p - s, c);
        q = q + qt;
        r = r - b * qt;
    }
    return {q, r};
}

LeftPseudoDiv left_pseudo_divmod(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
{
    if (b.is_zero()) throw InputError("division by zero twisted polynomial");
    const Twist& tw = *a.twist();
    const int k = tw.vars();
    LeftPseudoDiv out{RationalFunction::one(k), SkewLaurentPoly(a.twist()), a};
    const long long degb = b.degree();
    const long long s = b.n_plus();
    const RationalFunction& beta = b.coeff(s);
    while (!out.remainder.is_zero() && out.remainder.degree() >= degb) {
        const long long p = out.remainder.n_plus();
        const RationalFunction g = apply_twist(tw, p - s, beta);
        SkewLaurentPoly qt =
            SkewLaurentPoly::term(a.twist(), p - s, out.remainder.coeff(p));
        SkewLaurentPoly gs = SkewLaurentPoly::term(a.twist(), 0, g);
        out.remainder = gs * out.remainder - qt * b;
        out.quotient = gs * out.quotient + qt;
        out.scale = g * out.scale;
    }
    return out;
}

RightPseudoDiv right_pseudo_divmod(const SkewLaurentPoly& a, const SkewLaurentPoly& b)
{
    if (b.is_zero()) throw InputError("division by zero twisted polynomial");
    const Twist& tw = *a.twist();
    const int k = tw.vars();
    RightPseudoDiv out{RationalFunction::one(k), SkewLaurentPoly(a.twist()), a};
    const long long degb = b.degree();
    const long long s = b.n_plus();
    const RationalFunction& beta = b.coeff(s);
    while (!out.remainder.is_zero() && out.remainder.degree() >= degb) {
        const long long p = out.remainder.n_plus();
        const RationalFunction g = apply_twist(tw, -p, beta);
        SkewLaurentPoly qt = SkewLaurentPoly::term(
            a.twist(), p - s, apply_twist(tw, -s, out.remainder.coeff(p)));
        SkewLaurentPoly gs = SkewLaurentPoly::term(a.twist(), 0, g);
        out.remainder = out.remainder * gs - b * qt;
        out.quotient = out.quotient * gs + qt;
        out.scale = out.scale * g;
    }
    return out;
}

std::string SkewLaurentPoly::str(const std::vector<std::string>& names,
                                 const std::string& uname) const
{
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const std::string c = it->second.str(names);
        if (it->first == 0) {
            out << c;
            continue;
        }
        const bool compound = c.find_first_of("+ ") != std::string::npos ||
                              c.find('/') != std::string::npos ||
                              c.find('-', 1) != std::string::npos;
        if (c == "1")
            ;
        else if (compound)
            out << "(" << c << ")*";
        else
            out << c << "*";
        out << uname;
        if (it->first != 1) out << "^" << it->first;
    }
    return out.str();
}

}  // namespace l2euler
