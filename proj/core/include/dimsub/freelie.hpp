#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/intlat.hpp"

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dimsub::freelie {

struct Generator {
    std::string id;
    int weight = 1;
};

using Word = std::vector<int>;
using BasisId = std::size_t;

class LieElement {
public:
    std::map<BasisId, Int> terms;

    bool is_zero() const { return terms.empty(); }
    void add(BasisId b, const Int& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Int& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Int& c, LieElement a) { return a *= c; }
    friend LieElement operator-(LieElement a) { return a *= -1; }
    friend bool operator==(const LieElement& a, const LieElement& b) = default;
};

struct HallBasisElement {
    BasisId id;
    Word word;
    std::size_t degree;
    int weight;
    std::size_t index;
};

// Free Lie ring over Z on weighted generators, with the Lyndon basis.
// Basis words are interned lazily; the tables are caches, so a ring must not
// be used from several threads at once.
class FreeLieRing {
public:
    explicit FreeLieRing(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t rank() const { return gens_.size(); }
    int letter(const std::string& id) const;
    int letter_weight(int l) const { return gens_[static_cast<std::size_t>(l)].weight; }
    int min_letter_weight() const;

    BasisId intern(const Word& lyndon) const;
    const Word& word(BasisId b) const { return entries_[b].word; }
    int weight(BasisId b) const { return entries_[b].weight; }
    std::size_t degree(BasisId b) const { return entries_[b].word.size(); }
    // Standard factorization of a basis element of degree >= 2.
    std::pair<BasisId, BasisId> factors(BasisId b) const;
    bool canonical_less(BasisId a, BasisId b) const;

    LieElement generator(int l) const;
    LieElement generator(const std::string& id) const { return generator(letter(id)); }
    LieElement basis_element(BasisId b) const;

    LieElement bracket(const LieElement& a, const LieElement& b) const;
    // Drops every term of weight above max_weight.
    LieElement bracket_truncated(const LieElement& a, const LieElement& b, int max_weight) const;
    LieElement left_normed(const std::vector<LieElement>& xs) const;

    std::vector<HallBasisElement> hall_basis(int max_weight) const;
    std::vector<BasisId> component(int weight) const;

    int min_weight(const LieElement& e) const;
    int max_weight(const LieElement& e) const;
    bool is_homogeneous(const LieElement& e) const;
    LieElement weight_part(const LieElement& e, int w) const;
    LieElement truncate(const LieElement& e, int max_weight) const;

    std::string bracket_string(BasisId b) const;
    std::string to_string(const LieElement& e) const;

private:
    struct Entry {
        Word word;
        int weight;
        BasisId left = 0;
        BasisId right = 0;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<BasisId, BasisId>& p) const
        {
            return std::hash<std::size_t>()(p.first * 1000003u ^ p.second);
        }
    };
    struct WordHash {
        std::size_t operator()(const Word& w) const;
    };

    const LieElement& bracket_basis(BasisId u, BasisId v) const;
    void enumerate_lyndon(int max_weight) const;

    std::vector<Generator> gens_;
    mutable std::deque<Entry> entries_;
    mutable std::unordered_map<Word, BasisId, WordHash> index_;
    mutable std::unordered_map<std::pair<BasisId, BasisId>, LieElement, PairHash> memo_;
    mutable int enumerated_up_to_ = 0;
};

// Ring homomorphism determined by images of the letters (one per letter of `source`).
LieElement substitute(const FreeLieRing& source, const LieElement& e,
                      const FreeLieRing& target, const std::vector<LieElement>& images);

// Coordinates on the weight-w homogeneous piece, basis in canonical order.
class Component {
public:
    Component(const FreeLieRing& ring, int weight);

    int weight() const { return weight_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisId>& basis() const { return basis_; }
    intlat::IntVector coords(const LieElement& e) const;
    LieElement element(const intlat::IntVector& v) const;
    intlat::Lattice span(const std::vector<LieElement>& elements) const;

private:
    const FreeLieRing* ring_;
    int weight_;
    std::vector<BasisId> basis_;
    std::unordered_map<BasisId, std::size_t> pos_;
};

// Degree-d piece of the ideal generated by a homogeneous element.
intlat::Lattice ideal_component(const FreeLieRing& ring, const LieElement& gen, int degree);
// Degree-d piece of sum over orderings of the left-normed ideal brackets.
intlat::Lattice symmetric_bracket_component(const FreeLieRing& ring,
                                            const std::vector<LieElement>& gens, int degree);
// Degree-d piece of the intersection of the ideals, by iterated lattice intersection.
intlat::Lattice intersection_component(const FreeLieRing& ring,
                                       const std::vector<LieElement>& gens, int degree);
// Same lattice computed as a common kernel of retractions; each generator
// must have a coefficient +-1 on some letter.
intlat::Lattice intersection_component_by_retractions(const FreeLieRing& ring,
                                                      const std::vector<LieElement>& gens,
                                                      int degree);

// Free Lie ring on x_0..x_{n-1}, with x_n = -(x_0+...+x_{n-1}) as an alias.
struct PuncturedRing {
    std::unique_ptr<FreeLieRing> ring;
    std::vector<LieElement> xi;  // x_0, ..., x_{n-1}, and the alias x_n
};
PuncturedRing punctured_ring(int n);

// Invariants of (I_0 cap ... cap I_n) / [I_0, ..., I_n]_Sigma in degree d.
std::vector<Int> homotopy_quotient(int n, int degree);
// Order of the class of e (an element of the intersection, written in pr) in that quotient.
Int homotopy_class_order(const PuncturedRing& pr, const LieElement& e, int degree);

}  // namespace dimsub::freelie
