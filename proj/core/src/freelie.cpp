#include "dimsub/freelie.hpp"

#include "dimsub/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dimsub::freelie {

using intlat::IntMatrix;
using intlat::IntVector;
using intlat::Lattice;

// ---------------------------------------------------------------- LieElement

void LieElement::add(BasisId b, const Int& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(b, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o)
{
    for (const auto& [b, c] : o.terms) add(b, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o)
{
    for (const auto& [b, c] : o.terms) add(b, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Int& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [b, x] : terms) x *= c;
    return *this;
}

// ---------------------------------------------------------------- helpers

namespace {

bool is_lyndon(const Word& w)
{
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i),
                                          w.end()))
            return false;
    return true;
}

// Calls f on every Lyndon word of length <= max_len over k letters, in lexicographic order.
void for_each_lyndon(int k, std::size_t max_len, const std::function<void(const Word&)>& f)
{
    if (k <= 0 || max_len == 0) return;
    Word w{-1};
    while (!w.empty()) {
        ++w.back();
        f(w);
        const std::size_t m = w.size();
        while (w.size() < max_len) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k - 1) w.pop_back();
    }
}

}  // namespace

std::size_t FreeLieRing::WordHash::operator()(const Word& w) const
{
    std::size_t h = w.size();
    for (int x : w) h = h * 1315423911u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
}

// ---------------------------------------------------------------- FreeLieRing

FreeLieRing::FreeLieRing(std::vector<Generator> gens) : gens_(std::move(gens))
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].weight < 1) throw InputError("generator weight must be positive: " + gens_[i].id);
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].id == gens_[i].id) throw InputError("duplicate generator: " + gens_[i].id);
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) intern(Word{static_cast<int>(i)});
}

int FreeLieRing::letter(const std::string& id) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].id == id) return static_cast<int>(i);
    throw InputError("unknown generator: " + id);
}

int FreeLieRing::min_letter_weight() const
{
    int m = 0;
    for (const auto& g : gens_)
        if (m == 0 || g.weight < m) m = g.weight;
    return m == 0 ? 1 : m;
}

BasisId FreeLieRing::intern(const Word& w) const
{
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    if (!is_lyndon(w)) throw InputError("intern: word is not a Lyndon word");
    Entry e;
    e.word = w;
    e.weight = 0;
    for (int l : w) {
        if (l < 0 || static_cast<std::size_t>(l) >= gens_.size())
            throw InputError("intern: letter out of range");
        e.weight += gens_[static_cast<std::size_t>(l)].weight;
    }
    if (w.size() >= 2) {
        std::size_t split = 1;
        for (std::size_t i = 2; i < w.size(); ++i)
            if (std::lexicographical_compare(w.begin() + static_cast<long>(i), w.end(),
                                             w.begin() + static_cast<long>(split), w.end()))
                split = i;
        e.left = intern(Word(w.begin(), w.begin() + static_cast<long>(split)));
        e.right = intern(Word(w.begin() + static_cast<long>(split), w.end()));
    }
    const BasisId id = entries_.size();
    entries_.push_back(std::move(e));
    index_.emplace(w, id);
    return id;
}

std::pair<BasisId, BasisId> FreeLieRing::factors(BasisId b) const
{
    if (degree(b) < 2) throw InputError("factors: generator has no factorization");
    return {entries_[b].left, entries_[b].right};
}

bool FreeLieRing::canonical_less(BasisId a, BasisId b) const
{
    const Entry& x = entries_[a];
    const Entry& y = entries_[b];
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
}

LieElement FreeLieRing::generator(int l) const
{
    if (l < 0 || static_cast<std::size_t>(l) >= gens_.size())
        throw InputError("generator index out of range");
    return basis_element(intern(Word{l}));
}

LieElement FreeLieRing::basis_element(BasisId b) const
{
    LieElement e;
    e.add(b, 1);
    return e;
}

const LieElement& FreeLieRing::bracket_basis(BasisId u, BasisId v) const
{
    static const LieElement zero;
    if (u == v) return zero;
    auto key = std::make_pair(u, v);
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second;

    LieElement result;
    const Word wu = entries_[u].word;
    const Word wv = entries_[v].word;
    if (wv < wu) {
        result = bracket_basis(v, u);
        result *= -1;
    } else if (wu.size() == 1 || !(entries_[entries_[u].right].word < wv)) {
        Word w = wu;
        w.insert(w.end(), wv.begin(), wv.end());
        result.add(intern(w), 1);
    } else {
        // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
        const BasisId u1 = entries_[u].left;
        const BasisId u2 = entries_[u].right;
        const LieElement& a = bracket_basis(u2, v);
        for (const auto& [t, c] : a.terms) {
            const LieElement& r = bracket_basis(u1, t);
            for (const auto& [s, d] : r.terms) result.add(s, c * d);
        }
        const LieElement& b = bracket_basis(u1, v);
        for (const auto& [t, c] : b.terms) {
            const LieElement& r = bracket_basis(t, u2);
            for (const auto& [s, d] : r.terms) result.add(s, c * d);
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

LieElement FreeLieRing::bracket(const LieElement& a, const LieElement& b) const
{
    LieElement out;
    for (const auto& [u, c] : a.terms)
        for (const auto& [v, d] : b.terms) {
            if (u == v) continue;
            const Int cd = c * d;
            for (const auto& [s, e] : bracket_basis(u, v).terms) out.add(s, cd * e);
        }
    return out;
}

LieElement FreeLieRing::bracket_truncated(const LieElement& a, const LieElement& b,
                                          int max_weight) const
{
    LieElement out;
    for (const auto& [u, c] : a.terms)
        for (const auto& [v, d] : b.terms) {
            if (u == v || weight(u) + weight(v) > max_weight) continue;
            const Int cd = c * d;
            for (const auto& [s, e] : bracket_basis(u, v).terms) out.add(s, cd * e);
        }
    return out;
}

LieElement FreeLieRing::left_normed(const std::vector<LieElement>& xs) const
{
    if (xs.empty()) return {};
    LieElement acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
    return acc;
}

void FreeLieRing::enumerate_lyndon(int max_weight) const
{
    if (max_weight <= enumerated_up_to_) return;
    const std::size_t max_len = static_cast<std::size_t>(max_weight / min_letter_weight());
    for_each_lyndon(static_cast<int>(gens_.size()), max_len, [&](const Word& w) {
        int wt = 0;
        for (int l : w) wt += gens_[static_cast<std::size_t>(l)].weight;
        if (wt <= max_weight) intern(w);
    });
    enumerated_up_to_ = max_weight;
}

std::vector<HallBasisElement> FreeLieRing::hall_basis(int max_weight) const
{
    if (max_weight < 1) throw InputError("hall_basis: max_weight must be positive");
    enumerate_lyndon(max_weight);
    std::vector<BasisId> ids;
    for (BasisId b = 0; b < entries_.size(); ++b)
        if (entries_[b].weight <= max_weight) ids.push_back(b);
    std::sort(ids.begin(), ids.end(), [this](BasisId a, BasisId b) { return canonical_less(a, b); });
    std::vector<HallBasisElement> out;
    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.push_back({ids[i], word(ids[i]), degree(ids[i]), weight(ids[i]), i});
    return out;
}

std::vector<BasisId> FreeLieRing::component(int w) const
{
    std::vector<BasisId> ids;
    if (w < 1) return ids;
    enumerate_lyndon(w);
    for (BasisId b = 0; b < entries_.size(); ++b)
        if (entries_[b].weight == w) ids.push_back(b);
    std::sort(ids.begin(), ids.end(), [this](BasisId a, BasisId b) { return canonical_less(a, b); });
    return ids;
}

int FreeLieRing::min_weight(const LieElement& e) const
{
    int m = 0;
    for (const auto& [b, c] : e.terms)
        if (m == 0 || weight(b) < m) m = weight(b);
    return m;
}

int FreeLieRing::max_weight(const LieElement& e) const
{
    int m = 0;
    for (const auto& [b, c] : e.terms) m = std::max(m, weight(b));
    return m;
}

bool FreeLieRing::is_homogeneous(const LieElement& e) const
{
    return min_weight(e) == max_weight(e);
}

LieElement FreeLieRing::weight_part(const LieElement& e, int w) const
{
    LieElement out;
    for (const auto& [b, c] : e.terms)
        if (weight(b) == w) out.terms.emplace(b, c);
    return out;
}

LieElement FreeLieRing::truncate(const LieElement& e, int max_w) const
{
    LieElement out;
    for (const auto& [b, c] : e.terms)
        if (weight(b) <= max_w) out.terms.emplace(b, c);
    return out;
}

std::string FreeLieRing::bracket_string(BasisId b) const
{
    if (degree(b) == 1) return gens_[static_cast<std::size_t>(word(b)[0])].id;
    return "[" + bracket_string(entries_[b].left) + "," + bracket_string(entries_[b].right) + "]";
}

std::string FreeLieRing::to_string(const LieElement& e) const
{
    if (e.is_zero()) return "0";
    std::vector<BasisId> ids;
    for (const auto& [b, c] : e.terms) ids.push_back(b);
    std::sort(ids.begin(), ids.end(), [this](BasisId a, BasisId b) { return canonical_less(a, b); });
    std::ostringstream os;
    bool first = true;
    for (BasisId b : ids) {
        const Int& c = e.terms.at(b);
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1) os << a.get_str() << "*";
        os << bracket_string(b);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- substitute

LieElement substitute(const FreeLieRing& source, const LieElement& e, const FreeLieRing& target,
                      const std::vector<LieElement>& images)
{
    if (images.size() != source.rank())
        throw InputError("substitute: expected one image per generator");
    std::unordered_map<BasisId, LieElement> memo;
    std::function<const LieElement&(BasisId)> eval = [&](BasisId b) -> const LieElement& {
        auto it = memo.find(b);
        if (it != memo.end()) return it->second;
        LieElement v;
        if (source.degree(b) == 1) {
            v = images[static_cast<std::size_t>(source.word(b)[0])];
        } else {
            auto [l, r] = source.factors(b);
            LieElement left = eval(l);
            v = target.bracket(left, eval(r));
        }
        return memo.emplace(b, std::move(v)).first->second;
    };
    LieElement out;
    for (const auto& [b, c] : e.terms) {
        LieElement t = eval(b);
        t *= c;
        out += t;
    }
    return out;
}

// ---------------------------------------------------------------- Component

Component::Component(const FreeLieRing& ring, int weight)
    : ring_(&ring), weight_(weight), basis_(ring.component(weight))
{
    for (std::size_t i = 0; i < basis_.size(); ++i) pos_.emplace(basis_[i], i);
}

IntVector Component::coords(const LieElement& e) const
{
    std::vector<std::pair<std::size_t, Int>> entries;
    for (const auto& [b, c] : e.terms) {
        auto it = pos_.find(b);
        if (it == pos_.end())
            throw InputError("element has a term outside the weight-" + std::to_string(weight_) +
                             " component");
        entries.emplace_back(it->second, c);
    }
    return IntVector::from_entries(basis_.size(), std::move(entries));
}

LieElement Component::element(const IntVector& v) const
{
    LieElement e;
    v.for_each([&](std::size_t i, const Int& c) { e.add(basis_[i], c); });
    return e;
}

Lattice Component::span(const std::vector<LieElement>& elements) const
{
    IntMatrix m(basis_.size());
    for (const auto& e : elements) m.rows.push_back(coords(e));
    return intlat::hnf(m);
}

// ---------------------------------------------------------------- graded ideals

namespace {

using Pieces = std::map<int, std::vector<LieElement>>;

std::vector<LieElement> reduced(const FreeLieRing& ring, int w, const std::vector<LieElement>& span)
{
    Component c(ring, w);
    Lattice l = c.span(span);
    std::vector<LieElement> out;
    for (const auto& r : l.basis().rows) out.push_back(c.element(r));
    return out;
}

// Basis of each graded piece of the ideal generated by a homogeneous element, up to max_w.
Pieces ideal_pieces(const FreeLieRing& ring, const LieElement& gen, int max_w)
{
    Pieces pieces;
    if (gen.is_zero()) return pieces;
    if (!ring.is_homogeneous(gen)) throw InputError("ideal generator must be homogeneous");
    const int w0 = ring.min_weight(gen);
    if (w0 > max_w) return pieces;
    pieces[w0] = reduced(ring, w0, {gen});
    for (int w = w0 + 1; w <= max_w; ++w) {
        std::vector<LieElement> span;
        for (std::size_t l = 0; l < ring.rank(); ++l) {
            const int wl = ring.letter_weight(static_cast<int>(l));
            auto it = pieces.find(w - wl);
            if (it == pieces.end()) continue;
            const LieElement x = ring.generator(static_cast<int>(l));
            for (const auto& b : it->second) span.push_back(ring.bracket(b, x));
        }
        auto basis = reduced(ring, w, span);
        if (!basis.empty()) pieces[w] = std::move(basis);
    }
    return pieces;
}

void check_degree(int degree)
{
    if (degree < 1 || degree > 64) throw InputError("degree out of range");
}

}  // namespace

Lattice ideal_component(const FreeLieRing& ring, const LieElement& gen, int degree)
{
    check_degree(degree);
    Pieces p = ideal_pieces(ring, gen, degree);
    Component c(ring, degree);
    auto it = p.find(degree);
    if (it == p.end()) return Lattice(c.dim());
    return c.span(it->second);
}

Lattice symmetric_bracket_component(const FreeLieRing& ring, const std::vector<LieElement>& gens,
                                    int degree)
{
    check_degree(degree);
    Component comp(ring, degree);
    const std::size_t m = gens.size();
    std::vector<int> min_w(m);
    int total_min = 0;
    std::vector<Pieces> pieces(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].is_zero()) return Lattice(comp.dim());
        min_w[i] = ring.min_weight(gens[i]);
        total_min += min_w[i];
    }
    if (m == 0 || total_min > degree) return Lattice(comp.dim());
    for (std::size_t i = 0; i < m; ++i)
        pieces[i] = ideal_pieces(ring, gens[i], degree - (total_min - min_w[i]));

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<LieElement> span;
    do {
        int remaining = total_min - min_w[order[0]];
        Pieces cur;
        for (const auto& [w, b] : pieces[order[0]])
            if (w <= degree - remaining) cur[w] = b;
        for (std::size_t j = 1; j < m && !cur.empty(); ++j) {
            remaining -= min_w[order[j]];
            const int cap = degree - remaining;
            std::map<int, std::vector<LieElement>> next;
            for (const auto& [w1, as] : cur)
                for (const auto& [w2, bs] : pieces[order[j]]) {
                    if (w1 + w2 > cap) continue;
                    auto& dst = next[w1 + w2];
                    for (const auto& a : as)
                        for (const auto& b : bs) dst.push_back(ring.bracket(a, b));
                }
            cur.clear();
            for (auto& [w, sp] : next) {
                auto basis = reduced(ring, w, sp);
                if (!basis.empty()) cur[w] = std::move(basis);
            }
        }
        auto it = cur.find(degree);
        if (it != cur.end()) span.insert(span.end(), it->second.begin(), it->second.end());
    } while (std::next_permutation(order.begin(), order.end()));
    return comp.span(span);
}

Lattice intersection_component(const FreeLieRing& ring, const std::vector<LieElement>& gens,
                               int degree)
{
    check_degree(degree);
    Component comp(ring, degree);
    if (gens.empty()) return comp.span({});
    Lattice acc = ideal_component(ring, gens[0], degree);
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = intlat::intersect(acc, ideal_component(ring, gens[i], degree));
    return acc;
}

Lattice intersection_component_by_retractions(const FreeLieRing& ring,
                                              const std::vector<LieElement>& gens, int degree)
{
    check_degree(degree);
    Component comp(ring, degree);
    std::vector<int> required_letters;
    std::vector<std::vector<LieElement>> maps;
    for (const auto& g : gens) {
        if (g.is_zero()) return Lattice(comp.dim());
        for (const auto& [b, c] : g.terms)
            if (ring.degree(b) != 1 || ring.weight(b) != 1)
                throw InputError("retraction method needs generators that are sums of weight-1 letters");
        if (g.terms.size() == 1 && abs(g.terms.begin()->second) == 1) {
            required_letters.push_back(ring.word(g.terms.begin()->first)[0]);
            continue;
        }
        int kill = -1;
        Int sign;
        for (const auto& [b, c] : g.terms)
            if (abs(c) == 1) {
                kill = ring.word(b)[0];
                sign = c;
                break;
            }
        if (kill < 0) throw InputError("retraction method needs a unit coefficient in each generator");
        std::vector<LieElement> images;
        for (std::size_t l = 0; l < ring.rank(); ++l) images.push_back(ring.generator(static_cast<int>(l)));
        LieElement rest = g;
        rest.terms.erase(ring.intern(Word{kill}));
        images[static_cast<std::size_t>(kill)] = (-sign) * rest;
        maps.push_back(std::move(images));
    }
    std::vector<std::size_t> domain;
    for (std::size_t i = 0; i < comp.dim(); ++i) {
        const Word& w = ring.word(comp.basis()[i]);
        bool ok = true;
        for (int l : required_letters)
            if (std::find(w.begin(), w.end(), l) == w.end()) ok = false;
        if (ok) domain.push_back(i);
    }
    IntMatrix m(maps.size() * comp.dim());
    for (std::size_t i : domain) {
        IntVector row(maps.size() * comp.dim());
        const LieElement b = ring.basis_element(comp.basis()[i]);
        for (std::size_t k = 0; k < maps.size(); ++k) {
            IntVector img = comp.coords(substitute(ring, b, ring, maps[k]));
            row.axpy(1, img.embedded(row.dim(), k * comp.dim()));
        }
        m.rows.push_back(std::move(row));
    }
    IntMatrix out(comp.dim());
    if (maps.empty()) {
        for (std::size_t i : domain) out.rows.push_back(IntVector::unit(comp.dim(), i));
    } else {
        Lattice k = intlat::left_kernel(m);
        for (const auto& r : k.basis().rows) {
            IntVector v(comp.dim());
            r.for_each([&](std::size_t j, const Int& c) { v.set(domain[j], c); });
            out.rows.push_back(std::move(v));
        }
    }
    return intlat::hnf(out);
}

PuncturedRing punctured_ring(int n)
{
    if (n < 1) throw InputError("punctured_ring: n must be positive");
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"x" + std::to_string(i), 1});
    PuncturedRing pr;
    pr.ring = std::make_unique<FreeLieRing>(std::move(gens));
    LieElement alias;
    for (int i = 0; i < n; ++i) {
        pr.xi.push_back(pr.ring->generator(i));
        alias -= pr.ring->generator(i);
    }
    pr.xi.push_back(alias);
    return pr;
}

std::vector<Int> homotopy_quotient(int n, int degree)
{
    PuncturedRing pr = punctured_ring(n);
    Lattice inter = intersection_component_by_retractions(*pr.ring, pr.xi, degree);
    Lattice sym = symmetric_bracket_component(*pr.ring, pr.xi, degree);
    return intlat::quotient_invariants(inter, sym);
}

Int homotopy_class_order(const PuncturedRing& pr, const LieElement& e, int degree)
{
    const Component comp(*pr.ring, degree);
    const IntVector v = comp.coords(e);
    if (!intlat::contains(intersection_component_by_retractions(*pr.ring, pr.xi, degree), v))
        throw PreconditionError("homotopy_class_order: element is not in the intersection");
    return intlat::order_modulo(symmetric_bracket_component(*pr.ring, pr.xi, degree), v);
}

}  // namespace dimsub::freelie
