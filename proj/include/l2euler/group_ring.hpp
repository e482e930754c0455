/* Supported quotient groups and their rational group rings.
 *
 * Two quotient shapes are supported:
 *   abelian(n):  Z^n, elements are integer vectors;
 *   polyZ(k, A): Z^k semidirect Z for a unimodular k x k matrix A, elements
 *                are pairs (v, m) with (v,m)(v',m') = (v + A^m v', m + m').
 *
 * Group ring elements are finite formal sums with rational coefficients.
 */
#ifndef L2EULER_GROUP_RING_HPP
#define L2EULER_GROUP_RING_HPP

#include "l2euler/errors.hpp"
#include "l2euler/imat.hpp"
#include "l2euler/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace l2euler {

enum class QuotientKind { Abelian, PolyZ };

struct GroupElem {
    IVec v;            // lattice part (length n for abelian, k for polyZ)
    long long m = 0;   // Z part; always 0 in the abelian case

    auto operator<=>(const GroupElem&) const = default;
};

struct QuotientSpec {
    QuotientKind kind = QuotientKind::Abelian;
    int rank = 0;                   // n (abelian) or k (polyZ)
    IMat twist_matrix;              // polyZ only; k x k, |det| = 1
    std::vector<GroupElem> images;  // one per presentation generator

    GroupElem identity() const { return GroupElem{IVec(static_cast<std::size_t>(rank), 0), 0}; }

    bool conforms(const GroupElem& g) const
    {
        return static_cast<int>(g.v.size()) == rank && (kind == QuotientKind::PolyZ || g.m == 0);
    }

    bool is_identity(const GroupElem& g) const { return g == identity(); }

    GroupElem mul(const GroupElem& a, const GroupElem& b) const
    {
        GroupElem r;
        if (kind == QuotientKind::Abelian) {
            r.v.resize(a.v.size());
            for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
            return r;
        }
        IVec tb = a.m == 0 ? b.v : imat_apply(imat_pow(twist_matrix, a.m), b.v);
        r.v.resize(a.v.size());
        for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + tb[i];
        r.m = a.m + b.m;
        return r;
    }

    GroupElem inv(const GroupElem& a) const
    {
        GroupElem r;
        if (kind == QuotientKind::Abelian) {
            r.v.resize(a.v.size());
            for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = -a.v[i];
            return r;
        }
        IVec w = a.m == 0 ? a.v : imat_apply(imat_pow(twist_matrix, -a.m), a.v);
        r.v.resize(a.v.size());
        for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = -w[i];
        r.m = -a.m;
        return r;
    }

    const GroupElem& image_of(int generator) const
    {
        if (generator < 0 || generator >= static_cast<int>(images.size()))
            throw InputError("generator index out of range");
        return images[static_cast<std::size_t>(generator)];
    }

    bool has_infinite_order(const GroupElem& g) const
    {
        // Both supported quotients are torsion-free.
        return !is_identity(g);
    }
};

class GroupRingElement {
public:
    GroupRingElement() = default;
    GroupRingElement(QuotientKind kind, int rank) : kind_(kind), rank_(rank) {}

    static GroupRingElement zero(const QuotientSpec& q) { return {q.kind, q.rank}; }

    static GroupRingElement unit(const QuotientSpec& q)
    {
        GroupRingElement r(q.kind, q.rank);
        r.terms_[q.identity()] = 1;
        return r;
    }

    static GroupRingElement of(const QuotientSpec& q, const GroupElem& g, const Rational& c = 1)
    {
        if (!q.conforms(g)) throw InputError("group element does not conform to quotient");
        GroupRingElement r(q.kind, q.rank);
        if (c != 0) r.terms_[g] = c;
        return r;
    }

    QuotientKind kind() const { return kind_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GroupElem, Rational>& terms() const { return terms_; }

    void add_term(const GroupElem& g, const Rational& c)
    {
        if (c == 0) return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b)
    {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b)
    {
        return !(a == b);
    }

private:
    QuotientKind kind_ = QuotientKind::Abelian;
    int rank_ = 0;
    std::map<GroupElem, Rational> terms_;
};

inline GroupRingElement gre_add(const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement r = a;
    for (const auto& [g, c] : b.terms()) r.add_term(g, c);
    return r;
}

inline GroupRingElement gre_neg(const GroupRingElement& a)
{
    GroupRingElement r(a.kind(), a.rank());
    for (const auto& [g, c] : a.terms()) r.add_term(g, -c);
    return r;
}

inline GroupRingElement gre_sub(const GroupRingElement& a, const GroupRingElement& b)
{
    return gre_add(a, gre_neg(b));
}

inline GroupRingElement gre_mul(const QuotientSpec& q, const GroupRingElement& a,
                                const GroupRingElement& b)
{
    GroupRingElement r(a.kind(), a.rank());
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) r.add_term(q.mul(ga, gb), ca * cb);
    return r;
}

}  // namespace l2euler

#endif
