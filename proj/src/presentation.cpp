#include "l2euler/presentation.hpp"

#include <cctype>
#include <sstream>

namespace l2euler {

void Presentation::validate() const
{
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].empty()) throw InputError("empty generator name");
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw InputError("duplicate generator name: " + generators[i]);
    }
    for (const FreeWord& r : relators)
        if (r.max_generator() >= num_generators())
            throw InputError("relator references an undeclared generator");
}

int Presentation::generator_index(const std::string& name) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

bool all_single_letter(const std::vector<std::string>& names)
{
    for (const auto& n : names)
        if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0]))) return false;
    return true;
}

}  // namespace

FreeWord parse_word(const std::string& text, const Presentation& p)
{
    const bool has_space = text.find_first_of(" \t") != std::string::npos;
    const bool has_caret = text.find('^') != std::string::npos;

    std::vector<Letter> raw;
    if (!has_space && !has_caret && all_single_letter(p.generators) &&
        p.generator_index(text) == -1) {
        // Compact form: lowercase letter = generator, uppercase = its inverse.
        for (char ch : text) {
            const char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            int g = p.generator_index(std::string(1, low));
            if (g < 0) throw InputError(std::string("unknown generator '") + ch + "' in word");
            raw.push_back(Letter{g, std::islower(static_cast<unsigned char>(ch)) ? 1 : -1});
        }
        return FreeWord(std::move(raw));
    }

    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::string name = token;
        long long power = 1;
        const auto caret = token.find('^');
        if (caret != std::string::npos) {
            name = token.substr(0, caret);
            const std::string exp = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                power = std::stoll(exp, &used);
                if (used != exp.size()) throw std::invalid_argument(exp);
            } catch (const std::exception&) {
                throw InputError("malformed exponent in token '" + token + "'");
            }
        }
        const int g = p.generator_index(name);
        if (g < 0) throw InputError("unknown generator '" + name + "' in word");
        const int sign = power >= 0 ? 1 : -1;
        for (long long i = 0, e = power >= 0 ? power : -power; i < e; ++i)
            raw.push_back(Letter{g, sign});
    }
    return FreeWord(std::move(raw));
}

std::string word_to_string(const FreeWord& w, const Presentation& p)
{
    if (w.empty()) return "";
    std::ostringstream out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (i > 0) out << ' ';
        out << p.generators[static_cast<std::size_t>(ls[i].gen)];
        const long long power = static_cast<long long>(j - i) * ls[i].sign;
        if (power != 1) out << '^' << power;
        i = j;
    }
    return out.str();
}

GroupElem apply_quotient(const QuotientSpec& q, const FreeWord& w)
{
    GroupElem acc = q.identity();
    for (const Letter& l : w.letters()) {
        const GroupElem& img = q.image_of(l.gen);
        acc = q.mul(acc, l.sign > 0 ? img : q.inv(img));
    }
    return acc;
}

GroupRingElement fox_derivative(const FreeWord& w, int gen, const QuotientSpec& q)
{
    GroupRingElement out(q.kind, q.rank);
    GroupElem prefix = q.identity();
    for (const Letter& l : w.letters()) {
        const GroupElem& img = q.image_of(l.gen);
        if (l.sign > 0) {
            if (l.gen == gen) out.add_term(prefix, 1);
            prefix = q.mul(prefix, img);
        } else {
            prefix = q.mul(prefix, q.inv(img));
            if (l.gen == gen) out.add_term(prefix, -1);
        }
    }
    return out;
}

std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p,
                                                      const QuotientSpec& q)
{
    std::vector<std::vector<GroupRingElement>> m;
    m.reserve(p.relators.size());
    for (const FreeWord& r : p.relators) {
        std::vector<GroupRingElement> row;
        row.reserve(p.generators.size());
        for (int i = 0; i < p.num_generators(); ++i) row.push_back(fox_derivative(r, i, q));
        m.push_back(std::move(row));
    }
    return m;
}

ZMat exponent_matrix(const Presentation& p)
{
    ZMat m(p.relators.size(), std::vector<Int>(p.generators.size(), 0));
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
        auto e = p.relators[j].exponent_vector(p.num_generators());
        for (std::size_t i = 0; i < e.size(); ++i) m[j][i] = e[i];
    }
    return m;
}

AbelianizationData abelianization(const Presentation& p)
{
    const int a = p.num_generators();
    const int b = p.num_relators();
    // Columns of M are the relator exponent vectors; H1 = coker(M : Z^b -> Z^a).
    ZMat m(static_cast<std::size_t>(a), std::vector<Int>(static_cast<std::size_t>(b), 0));
    ZMat e = exponent_matrix(p);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

    SmithNormalForm snf = smith_normal_form(m);
    AbelianizationData out;
    const int r = static_cast<int>(snf.divisors.size());
    out.free_rank = a - r;
    for (const Int& d : snf.divisors)
        if (d > 1) out.torsion_divisors.push_back(d);
    // In the basis given by `left`, the free coordinates are the last a - r.
    out.projection.assign(static_cast<std::size_t>(out.free_rank),
                          std::vector<Int>(static_cast<std::size_t>(a), 0));
    for (int i = 0; i < out.free_rank; ++i)
        out.projection[static_cast<std::size_t>(i)] = snf.left[static_cast<std::size_t>(r + i)];
    return out;
}

QuotientSpec abelianization_quotient(const Presentation& p)
{
    AbelianizationData ab = abelianization(p);
    QuotientSpec q;
    q.kind = QuotientKind::Abelian;
    q.rank = ab.free_rank;
    for (int g = 0; g < p.num_generators(); ++g) {
        GroupElem img;
        img.v.resize(static_cast<std::size_t>(ab.free_rank));
        for (int i = 0; i < ab.free_rank; ++i) {
            const Int& x = ab.projection[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
            img.v[static_cast<std::size_t>(i)] = static_cast<long long>(x);
        }
        q.images.push_back(std::move(img));
    }
    return q;
}

}  // namespace l2euler
