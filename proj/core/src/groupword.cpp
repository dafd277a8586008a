#include "dimsub/groupword.hpp"

#include "dimsub/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace dimsub::freeassoc {

bool GroupWord::is_reduced() const
{
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i].gen == letters_[i + 1].gen && letters_[i].exp == -letters_[i + 1].exp)
            return false;
    return true;
}

std::string GroupWord::to_string(const std::vector<std::string>& names) const
{
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        const auto g = static_cast<std::size_t>(letters_[i].gen);
        os << (g < names.size() ? names[g] : "g" + std::to_string(g));
        if (letters_[i].exp < 0) os << "^-1";
    }
    return os.str();
}

GroupWord free_reduce(const GroupWord& w)
{
    std::vector<GroupLetter> out;
    out.reserve(w.length());
    for (const auto& l : w.letters()) {
        if (l.exp != 1 && l.exp != -1) throw InputError("group letters must have exponent +1 or -1");
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord(std::move(out));
}

GroupWord inverse(const GroupWord& w)
{
    std::vector<GroupLetter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& l : out) l.exp = -l.exp;
    return GroupWord(std::move(out));
}

GroupWord product(const GroupWord& a, const GroupWord& b)
{
    std::vector<GroupLetter> out = a.letters();
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return free_reduce(GroupWord(std::move(out)));
}

GroupWord power(const GroupWord& w, long k)
{
    const GroupWord base = k < 0 ? inverse(w) : w;
    GroupWord out;
    for (long i = 0; i < std::labs(k); ++i) out = product(out, base);
    return out;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b)
{
    return product(product(inverse(a), inverse(b)), product(a, b));
}

GroupWord conjugate(const GroupWord& a, const GroupWord& b)
{
    return product(product(inverse(b), a), b);
}

GroupWord group_retraction(const GroupWord& w, const std::vector<GroupWord>& images)
{
    std::vector<GroupLetter> out;
    for (const auto& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
            throw InputError("group_retraction: unmapped generator");
        const GroupWord img = l.exp > 0 ? images[static_cast<std::size_t>(l.gen)]
                                        : inverse(images[static_cast<std::size_t>(l.gen)]);
        out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return free_reduce(GroupWord(std::move(out)));
}

// ---------------------------------------------------------------- series

AssocElement series_inverse(const AssocElement& u)
{
    if (u.coefficient({}) != 1) throw InputError("series_inverse: constant term must be 1");
    if (u.max_degree() == kUntruncated) throw InputError("series_inverse needs a truncation degree");
    AssocElement a = u;
    a.add({}, -1);
    // (1 + a)^-1 = sum (-a)^k
    AssocElement result = AssocElement::one(u.alphabet(), u.max_degree());
    AssocElement term = result;
    const AssocElement neg = -a;
    for (int k = 1; k <= u.max_degree(); ++k) {
        term = multiply(term, neg);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

AssocElement series_power(const AssocElement& u, const Int& k)
{
    if (u.coefficient({}) != 1) throw InputError("series_power: constant term must be 1");
    if (u.max_degree() == kUntruncated) throw InputError("series_power needs a truncation degree");
    if (k < 0) return series_power(series_inverse(u), -k);
    AssocElement a = u;
    a.add({}, -1);
    AssocElement result = AssocElement::one(u.alphabet(), u.max_degree());
    AssocElement term = result;
    for (int j = 1; j <= u.max_degree() && k >= j; ++j) {
        term = multiply(term, a);
        if (term.is_zero()) break;
        Int binom;
        mpz_bin_ui(binom.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(j));
        result += binom * term;
    }
    return result;
}

AssocElement magnus_expand(const GroupWord& w, std::size_t alphabet, int max_degree)
{
    if (max_degree < 1) throw InputError("magnus_expand: degree must be at least 1");
    AssocElement result = AssocElement::one(alphabet, max_degree);
    for (const auto& l : w.letters()) {
        AssocElement f = AssocElement::one(alphabet, max_degree);
        if (l.exp > 0) {
            f.add({l.gen}, 1);
        } else {
            // (1 + x)^-1 = 1 - x + x^2 - ...
            Word p;
            for (int k = 1; k <= max_degree; ++k) {
                p.push_back(l.gen);
                f.add(p, (k % 2) ? -1 : 1);
            }
        }
        result = multiply(result, f);
    }
    return result;
}

// ---------------------------------------------------------------- GroupExpr

GroupExpr GroupExpr::letter(int g)
{
    return GroupExpr(std::make_shared<const Node>(Node{Kind::Letter, g, Int(0), {}}));
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors)
{
    return GroupExpr(std::make_shared<const Node>(Node{Kind::Product, 0, Int(0), std::move(factors)}));
}

GroupExpr GroupExpr::inverse(GroupExpr a)
{
    return GroupExpr(std::make_shared<const Node>(Node{Kind::Inverse, 0, Int(0), {std::move(a)}}));
}

GroupExpr GroupExpr::power(GroupExpr a, Int k)
{
    return GroupExpr(
        std::make_shared<const Node>(Node{Kind::Power, 0, std::move(k), {std::move(a)}}));
}

GroupExpr GroupExpr::commutator(GroupExpr a, GroupExpr b)
{
    return GroupExpr(std::make_shared<const Node>(
        Node{Kind::Commutator, 0, Int(0), {std::move(a), std::move(b)}}));
}

GroupExpr GroupExpr::conjugate(GroupExpr a, GroupExpr b)
{
    return GroupExpr(std::make_shared<const Node>(
        Node{Kind::Conjugate, 0, Int(0), {std::move(a), std::move(b)}}));
}

GroupWord GroupExpr::to_word(long max_exponent) const
{
    switch (kind()) {
    case Kind::Letter:
        return GroupWord::generator(gen());
    case Kind::Product: {
        GroupWord w;
        for (const auto& c : children()) w = freeassoc::product(w, c.to_word(max_exponent));
        return w;
    }
    case Kind::Inverse:
        return freeassoc::inverse(children()[0].to_word(max_exponent));
    case Kind::Power: {
        if (abs(exponent()) > max_exponent)
            throw InputError("power too large to expand into letters: " + exponent().get_str());
        return freeassoc::power(children()[0].to_word(max_exponent), exponent().get_si());
    }
    case Kind::Commutator:
        return freeassoc::commutator(children()[0].to_word(max_exponent),
                                     children()[1].to_word(max_exponent));
    case Kind::Conjugate:
        return freeassoc::conjugate(children()[0].to_word(max_exponent),
                                    children()[1].to_word(max_exponent));
    }
    return {};
}

AssocElement magnus_expand(const GroupExpr& e, std::size_t alphabet, int max_degree)
{
    if (max_degree < 1) throw InputError("magnus_expand: degree must be at least 1");
    auto rec = [&](auto&& self, const GroupExpr& x) -> AssocElement {
        switch (x.kind()) {
        case GroupExpr::Kind::Letter:
            return magnus_expand(GroupWord::generator(x.gen()), alphabet, max_degree);
        case GroupExpr::Kind::Product: {
            AssocElement r = AssocElement::one(alphabet, max_degree);
            for (const auto& c : x.children()) r = multiply(r, self(self, c));
            return r;
        }
        case GroupExpr::Kind::Inverse:
            return series_inverse(self(self, x.children()[0]));
        case GroupExpr::Kind::Power:
            return series_power(self(self, x.children()[0]), x.exponent());
        case GroupExpr::Kind::Commutator: {
            const AssocElement a = self(self, x.children()[0]);
            const AssocElement b = self(self, x.children()[1]);
            return multiply(multiply(series_inverse(a), series_inverse(b)), multiply(a, b));
        }
        case GroupExpr::Kind::Conjugate: {
            const AssocElement a = self(self, x.children()[0]);
            const AssocElement b = self(self, x.children()[1]);
            return multiply(multiply(series_inverse(b), a), b);
        }
        }
        return AssocElement::one(alphabet, max_degree);
    };
    return rec(rec, e);
}

}  // namespace dimsub::freeassoc
