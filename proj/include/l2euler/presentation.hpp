/* Freely reduced words, finite group presentations, Fox derivatives, and
 * abelianization data.
 *
 * Word syntax: space-separated tokens `name`, `name^-1`, `name^k`; a compact
 * form is accepted for single-letter generators, where an uppercase letter
 * denotes the inverse ("xYx" = x y^-1 x).
 */
#ifndef L2EULER_PRESENTATION_HPP
#define L2EULER_PRESENTATION_HPP

#include "l2euler/group_ring.hpp"
#include "l2euler/snf.hpp"

#include <string>
#include <vector>

namespace l2euler {

struct Letter {
    int gen = 0;
    int sign = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

class FreeWord {
public:
    FreeWord() = default;

    // Reduces the raw letter sequence.
    explicit FreeWord(std::vector<Letter> raw) { for (const Letter& l : raw) push(l); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const
    {
        FreeWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(Letter{it->gen, -it->sign});
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b)
    {
        FreeWord w = a;
        for (const Letter& l : b.letters_) w.push(l);
        return w;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

    // Exponent sum per generator.
    std::vector<long long> exponent_vector(int ngen) const
    {
        std::vector<long long> e(static_cast<std::size_t>(ngen), 0);
        for (const Letter& l : letters_) e[static_cast<std::size_t>(l.gen)] += l.sign;
        return e;
    }

    int max_generator() const
    {
        int g = -1;
        for (const Letter& l : letters_) g = std::max(g, l.gen);
        return g;
    }

private:
    void push(const Letter& l)
    {
        if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
        if (l.gen < 0) throw InputError("negative generator index");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

inline FreeWord reduce_word(const std::vector<Letter>& raw) { return FreeWord(raw); }

struct Presentation {
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;

    int num_generators() const { return static_cast<int>(generators.size()); }
    int num_relators() const { return static_cast<int>(relators.size()); }
    int deficiency() const { return num_generators() - num_relators(); }

    void validate() const;
    int generator_index(const std::string& name) const;  // -1 when unknown
};

FreeWord parse_word(const std::string& text, const Presentation& p);
std::string word_to_string(const FreeWord& w, const Presentation& p);

// mu applied to a word, multiplying images left to right.
GroupElem apply_quotient(const QuotientSpec& q, const FreeWord& w);

// Fox derivative with respect to generator `gen`, pushed forward through the
// quotient map: a positive occurrence of the generator contributes the image
// of the prefix before it, a negative occurrence minus the image of the
// prefix through it.
GroupRingElement fox_derivative(const FreeWord& w, int gen, const QuotientSpec& q);

// b x a matrix, entry (j, i) = d R_j / d x_i.
std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p,
                                                      const QuotientSpec& q);

// Relator exponent-sum matrix, b rows x a columns.
ZMat exponent_matrix(const Presentation& p);

struct AbelianizationData {
    int free_rank = 0;
    std::vector<Int> torsion_divisors;  // entries > 1, divisibility chain
    ZMat projection;                    // free_rank x a, full row rank
};

AbelianizationData abelianization(const Presentation& p);

// The quotient onto the free part of the abelianization.
QuotientSpec abelianization_quotient(const Presentation& p);

}  // namespace l2euler

#endif
