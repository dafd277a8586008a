#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freeassoc.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dimsub::freeassoc {

struct GroupLetter {
    int gen = 0;
    int exp = 1;  // +1 or -1
    friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

// Word in a free group. Conventions: [a,b] = a^-1 b^-1 a b and a^b = b^-1 a b.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<GroupLetter> letters) : letters_(std::move(letters)) {}
    static GroupWord generator(int g, int exp = 1) { return GroupWord({{g, exp}}); }

    const std::vector<GroupLetter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool is_reduced() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<GroupLetter> letters_;
};

GroupWord free_reduce(const GroupWord& w);
GroupWord inverse(const GroupWord& w);
GroupWord product(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& w, long k);
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord conjugate(const GroupWord& a, const GroupWord& b);

// Homomorphic image; images[g] is the image of generator g.
GroupWord group_retraction(const GroupWord& w, const std::vector<GroupWord>& images);

// Image of the word in the truncated ring of noncommuting power series,
// with generator g sent to 1 + x_g.
AssocElement magnus_expand(const GroupWord& w, std::size_t alphabet, int max_degree);

// Group expression with unexpanded integer powers.
class GroupExpr {
public:
    enum class Kind { Letter, Product, Inverse, Power, Commutator, Conjugate };

    static GroupExpr letter(int g);
    static GroupExpr product(std::vector<GroupExpr> factors);
    static GroupExpr inverse(GroupExpr a);
    static GroupExpr power(GroupExpr a, Int k);
    static GroupExpr commutator(GroupExpr a, GroupExpr b);
    static GroupExpr conjugate(GroupExpr a, GroupExpr b);
    static GroupExpr identity() { return product({}); }

    Kind kind() const { return node_->kind; }
    int gen() const { return node_->gen; }
    const Int& exponent() const { return node_->exponent; }
    const std::vector<GroupExpr>& children() const { return node_->children; }

    // Expands powers into letters; fails when |exponent| exceeds max_exponent.
    GroupWord to_word(long max_exponent = 1 << 16) const;

private:
    struct Node {
        Kind kind;
        int gen = 0;
        Int exponent;
        std::vector<GroupExpr> children;
    };
    explicit GroupExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

AssocElement magnus_expand(const GroupExpr& e, std::size_t alphabet, int max_degree);

// Inverse of an element with constant term 1, within the truncation.
AssocElement series_inverse(const AssocElement& u);
// u^k for u with constant term 1 and any integer k, via the binomial series.
AssocElement series_power(const AssocElement& u, const Int& k);

}  // namespace dimsub::freeassoc
