#include "dimsub/freeassoc.hpp"

#include "dimsub/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dimsub::freeassoc {

using intlat::IntMatrix;
using intlat::IntVector;

// ---------------------------------------------------------------- AssocElement

AssocElement AssocElement::one(std::size_t alphabet, int max_degree)
{
    return word(alphabet, {}, 1, max_degree);
}

AssocElement AssocElement::letter(std::size_t alphabet, int l, int max_degree)
{
    return word(alphabet, {l}, 1, max_degree);
}

AssocElement AssocElement::word(std::size_t alphabet, const Word& w, const Int& c, int max_degree)
{
    AssocElement e(alphabet, max_degree);
    e.add(w, c);
    return e;
}

Int AssocElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void AssocElement::add(const Word& w, const Int& c)
{
    if (c == 0) return;
    if (max_degree_ != kUntruncated && w.size() > static_cast<std::size_t>(max_degree_)) return;
    for (int l : w)
        if (l < 0 || static_cast<std::size_t>(l) >= alphabet_)
            throw InputError("word letter outside the alphabet");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AssocElement AssocElement::part(std::size_t degree) const
{
    AssocElement out(alphabet_, max_degree_);
    for (const auto& [w, c] : terms_)
        if (w.size() == degree) out.terms_.emplace(w, c);
    return out;
}

AssocElement AssocElement::truncated(int max_degree) const
{
    AssocElement out(alphabet_, max_degree);
    for (const auto& [w, c] : terms_) out.add(w, c);
    return out;
}

std::size_t AssocElement::min_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

std::size_t AssocElement::max_term_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void AssocElement::check_compatible(const AssocElement& o) const
{
    if (alphabet_ != o.alphabet_) throw InputError("associative elements over different alphabets");
    if (max_degree_ != o.max_degree_)
        throw InputError("associative elements with different truncation degrees");
}

AssocElement& AssocElement::operator+=(const AssocElement& o)
{
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& o)
{
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

AssocElement& AssocElement::operator*=(const Int& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

std::string AssocElement::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (w.empty()) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ".";
            const auto l = static_cast<std::size_t>(w[i]);
            os << (l < names.size() ? names[l] : "x" + std::to_string(l));
        }
    }
    return os.str();
}

AssocElement multiply(const AssocElement& a, const AssocElement& b)
{
    if (a.alphabet() != b.alphabet())
        throw InputError("associative elements over different alphabets");
    if (a.max_degree() != b.max_degree())
        throw InputError("associative elements with different truncation degrees");
    AssocElement out(a.alphabet(), a.max_degree());
    const int cap = a.max_degree();
    for (const auto& [u, c] : a.terms()) {
        for (const auto& [v, d] : b.terms()) {
            if (cap != kUntruncated && u.size() + v.size() > static_cast<std::size_t>(cap)) break;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, c * d);
        }
    }
    return out;
}

AssocElement commutator(const AssocElement& a, const AssocElement& b)
{
    return multiply(a, b) - multiply(b, a);
}

bool verify_identity(const AssocElement& lhs, const AssocElement& rhs)
{
    if (lhs.alphabet() != rhs.alphabet() || lhs.max_degree() != rhs.max_degree())
        throw InputError("verify_identity: incompatible operands");
    return lhs.terms() == rhs.terms();
}

AssocElement lie_expand(const freelie::FreeLieRing& ring, const freelie::LieElement& e,
                        int max_degree)
{
    const std::size_t k = ring.rank();
    std::unordered_map<freelie::BasisId, AssocElement> memo;
    auto eval = [&](auto&& self, freelie::BasisId b) -> const AssocElement& {
        auto it = memo.find(b);
        if (it != memo.end()) return it->second;
        AssocElement v(k, max_degree);
        if (ring.degree(b) == 1) {
            v = AssocElement::letter(k, ring.word(b)[0], max_degree);
        } else {
            auto [l, r] = ring.factors(b);
            AssocElement left = self(self, l);
            v = commutator(left, self(self, r));
        }
        return memo.emplace(b, std::move(v)).first->second;
    };
    AssocElement out(k, max_degree);
    for (const auto& [b, c] : e.terms) out += c * eval(eval, b);
    return out;
}

AssocElement dynkin(const AssocElement& e)
{
    const std::size_t k = e.alphabet();
    AssocElement out(k, e.max_degree());
    for (const auto& [w, c] : e.terms()) {
        if (w.empty()) continue;
        AssocElement acc = AssocElement::letter(k, w[0], e.max_degree());
        for (std::size_t i = 1; i < w.size(); ++i)
            acc = commutator(acc, AssocElement::letter(k, w[i], e.max_degree()));
        out += c * acc;
    }
    return out;
}

// ---------------------------------------------------------------- WordComponent

WordComponent::WordComponent(std::size_t alphabet, std::size_t degree)
    : alphabet_(alphabet), degree_(degree), dim_(1)
{
    for (std::size_t i = 0; i < degree; ++i) {
        if (alphabet != 0 && dim_ > (std::size_t{1} << 40) / alphabet)
            throw InputError("word component too large");
        dim_ *= alphabet;
    }
}

std::size_t WordComponent::index(const Word& w) const
{
    if (w.size() != degree_) throw InputError("word of the wrong length for this component");
    std::size_t idx = 0;
    for (int l : w) idx = idx * alphabet_ + static_cast<std::size_t>(l);
    return idx;
}

Word WordComponent::word(std::size_t index) const
{
    Word w(degree_);
    for (std::size_t i = degree_; i-- > 0;) {
        w[i] = static_cast<int>(index % alphabet_);
        index /= alphabet_;
    }
    return w;
}

IntVector WordComponent::coords(const AssocElement& e) const
{
    if (e.alphabet() != alphabet_) throw InputError("element over a different alphabet");
    std::vector<std::pair<std::size_t, Int>> entries;
    for (const auto& [w, c] : e.terms()) entries.emplace_back(index(w), c);
    return IntVector::from_entries(dim_, std::move(entries));
}

AssocElement WordComponent::element(const IntVector& v) const
{
    AssocElement e(alphabet_);
    v.for_each([&](std::size_t i, const Int& c) { e.add(word(i), c); });
    return e;
}

// ---------------------------------------------------------------- SymmetricProduct

namespace {

void for_each_word(std::size_t alphabet, std::size_t len, const std::function<void(const Word&)>& f)
{
    Word w(len, 0);
    while (true) {
        f(w);
        std::size_t i = len;
        while (i > 0 && static_cast<std::size_t>(w[i - 1]) + 1 == alphabet) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

// All ways to split `total` into `parts` ordered nonnegative summands.
void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> c(parts, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == parts) {
            c[i] = left;
            f(c);
            return;
        }
        for (std::size_t x = 0; x <= left; ++x) {
            c[i] = x;
            self(self, i + 1, left - x);
        }
    };
    if (parts > 0) rec(rec, 0, total);
}

}  // namespace

SymmetricProduct::SymmetricProduct(std::vector<AssocElement> leading, std::size_t degree)
    : leading_(std::move(leading)),
      component_(leading_.empty() ? 0 : leading_.front().alphabet(), degree)
{
    const std::size_t m = leading_.size();
    for (const auto& x : leading_) {
        if (x.alphabet() != component_.alphabet())
            throw InputError("symmetric product factors over different alphabets");
        if (x.is_zero() || x.min_degree() != 1 || x.max_term_degree() != 1)
            throw InputError("symmetric product factors must be homogeneous of degree 1");
    }
    if (m > 0 && degree >= m) {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        do {
            for_each_composition(degree - m, m + 1, [&](const std::vector<std::size_t>& lens) {
                std::vector<Word> pads(m + 1);
                auto rec = [&](auto&& self, std::size_t i) -> void {
                    if (i == m + 1) {
                        terms_.push_back({order, pads});
                        return;
                    }
                    for_each_word(component_.alphabet(), lens[i], [&](const Word& w) {
                        pads[i] = w;
                        self(self, i + 1);
                    });
                };
                rec(rec, 0);
            });
        } while (std::next_permutation(order.begin(), order.end()));
    }
    IntMatrix rows(component_.dim());
    for (const auto& t : terms_) rows.rows.push_back(component_.coords(expand(t)));
    hnf_ = intlat::hnf_with_transform(rows);
    lattice_ = hnf_.lattice;
}

AssocElement SymmetricProduct::expand(const ProductTerm& t) const
{
    const std::size_t k = component_.alphabet();
    AssocElement acc = AssocElement::word(k, t.paddings.at(0));
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        acc = multiply(acc, leading_.at(t.order[i]));
        acc = multiply(acc, AssocElement::word(k, t.paddings.at(i + 1)));
    }
    return acc;
}

bool SymmetricProduct::contains(const AssocElement& e) const
{
    return intlat::contains(lattice_, component_.coords(e));
}

std::optional<ProductCertificate> SymmetricProduct::certificate(const AssocElement& e) const
{
    auto coeffs = intlat::member(lattice_, component_.coords(e));
    if (!coeffs) return std::nullopt;
    std::vector<Int> combo(terms_.size());
    for (std::size_t r = 0; r < coeffs->size(); ++r) {
        if ((*coeffs)[r] == 0) continue;
        hnf_.transform.rows[r].for_each(
            [&](std::size_t j, const Int& c) { combo[j] += (*coeffs)[r] * c; });
    }
    ProductCertificate cert;
    for (std::size_t j = 0; j < combo.size(); ++j)
        if (combo[j] != 0) cert.terms.emplace_back(combo[j], terms_[j]);
    return cert;
}

AssocElement SymmetricProduct::expand(const ProductCertificate& c) const
{
    AssocElement out(component_.alphabet());
    for (const auto& [coef, t] : c.terms) out += coef * expand(t);
    return out;
}

intlat::Lattice symmetric_product_component(const std::vector<AssocElement>& leading,
                                            std::size_t degree)
{
    return SymmetricProduct(leading, degree).lattice();
}

}  // namespace dimsub::freeassoc
