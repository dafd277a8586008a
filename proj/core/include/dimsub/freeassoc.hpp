#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/intlat.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dimsub::freeassoc {

using Word = std::vector<int>;

// Degree first, then lexicographic.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline constexpr int kUntruncated = -1;

// Element of Z<x_0..x_{k-1}>, optionally truncated: words longer than
// max_degree are dropped by every operation.
class AssocElement {
public:
    AssocElement() = default;
    AssocElement(std::size_t alphabet, int max_degree = kUntruncated)
        : alphabet_(alphabet), max_degree_(max_degree)
    {
    }

    static AssocElement one(std::size_t alphabet, int max_degree = kUntruncated);
    static AssocElement letter(std::size_t alphabet, int l, int max_degree = kUntruncated);
    static AssocElement word(std::size_t alphabet, const Word& w, const Int& c = 1,
                             int max_degree = kUntruncated);

    std::size_t alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    const std::map<Word, Int, DegLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Word& w) const;

    void add(const Word& w, const Int& c);
    // Homogeneous part of the given length.
    AssocElement part(std::size_t degree) const;
    AssocElement truncated(int max_degree) const;
    std::size_t min_degree() const;
    std::size_t max_term_degree() const;

    AssocElement& operator+=(const AssocElement& o);
    AssocElement& operator-=(const AssocElement& o);
    AssocElement& operator*=(const Int& c);
    friend AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
    friend AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }
    friend AssocElement operator*(const Int& c, AssocElement a) { return a *= c; }
    friend AssocElement operator-(AssocElement a) { return a *= -1; }
    friend bool operator==(const AssocElement& a, const AssocElement& b) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const AssocElement& o) const;

    std::size_t alphabet_ = 0;
    int max_degree_ = kUntruncated;
    std::map<Word, Int, DegLexLess> terms_;
};

AssocElement multiply(const AssocElement& a, const AssocElement& b);
AssocElement commutator(const AssocElement& a, const AssocElement& b);
bool verify_identity(const AssocElement& lhs, const AssocElement& rhs);

// Image of a Lie element in the enveloping ring, brackets expanded as ab - ba.
AssocElement lie_expand(const freelie::FreeLieRing& ring, const freelie::LieElement& e,
                        int max_degree = kUntruncated);
// Linear map sending each word to its left-normed bracket.
AssocElement dynkin(const AssocElement& e);

// Coordinates on the words of one fixed length, in lexicographic order.
class WordComponent {
public:
    WordComponent(std::size_t alphabet, std::size_t degree);

    std::size_t alphabet() const { return alphabet_; }
    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return dim_; }
    std::size_t index(const Word& w) const;
    Word word(std::size_t index) const;
    intlat::IntVector coords(const AssocElement& e) const;
    AssocElement element(const intlat::IntVector& v) const;

private:
    std::size_t alphabet_;
    std::size_t degree_;
    std::size_t dim_;
};

// One spanning product of the symmetric ideal product: the factor order
// and the padding words placed before, between and after the factors.
struct ProductTerm {
    std::vector<std::size_t> order;
    std::vector<Word> paddings;  // order.size() + 1 entries
};

struct ProductCertificate {
    std::vector<std::pair<Int, ProductTerm>> terms;
};

// Degree-d piece of the sum over orderings of products of the two-sided
// ideals generated by the given degree-1 elements.
class SymmetricProduct {
public:
    SymmetricProduct(std::vector<AssocElement> leading, std::size_t degree);

    const WordComponent& component() const { return component_; }
    const intlat::Lattice& lattice() const { return lattice_; }
    std::size_t spanning_size() const { return terms_.size(); }
    AssocElement expand(const ProductTerm& t) const;
    bool contains(const AssocElement& e) const;
    std::optional<ProductCertificate> certificate(const AssocElement& e) const;
    AssocElement expand(const ProductCertificate& c) const;

private:
    std::vector<AssocElement> leading_;
    WordComponent component_;
    std::vector<ProductTerm> terms_;
    intlat::HnfTransform hnf_;
    intlat::Lattice lattice_;
};

intlat::Lattice symmetric_product_component(const std::vector<AssocElement>& leading,
                                            std::size_t degree);

}  // namespace dimsub::freeassoc
