#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/groupword.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dimsub::cli {

enum class Flavor { Lie, Group };

// Lie expression kept as a tree, so that generators can be replaced by
// arbitrary expressions before any normalization.
class LieExpr {
public:
    enum class Kind { Generator, Sum, Bracket };

    static LieExpr generator(int g);
    static LieExpr sum(std::vector<std::pair<Int, LieExpr>> terms);
    static LieExpr bracket(LieExpr a, LieExpr b);
    static LieExpr zero() { return sum({}); }
    static LieExpr left_normed(const std::vector<LieExpr>& xs);

    Kind kind() const { return node_->kind; }
    int gen() const { return node_->gen; }
    const std::vector<std::pair<Int, LieExpr>>& terms() const { return node_->terms; }
    const LieExpr& left() const { return node_->terms[0].second; }
    const LieExpr& right() const { return node_->terms[1].second; }

    friend LieExpr operator+(const LieExpr& a, const LieExpr& b) { return sum({{1, a}, {1, b}}); }
    friend LieExpr operator-(const LieExpr& a, const LieExpr& b) { return sum({{1, a}, {-1, b}}); }
    friend LieExpr operator*(const Int& c, const LieExpr& a) { return sum({{c, a}}); }

    // Evaluates the tree in any target with a zero, addition, integer scaling and a bracket.
    template <class T, class Gen, class Add, class Scale, class Br>
    T evaluate(const T& zero, Gen&& gen_value, Add&& add, Scale&& scale, Br&& br) const
    {
        switch (kind()) {
        case Kind::Generator:
            return gen_value(gen());
        case Kind::Bracket:
            return br(left().evaluate(zero, gen_value, add, scale, br),
                      right().evaluate(zero, gen_value, add, scale, br));
        case Kind::Sum:
            break;
        }
        T acc = zero;
        for (const auto& [c, e] : terms()) {
            if (c == 0) continue;
            acc = add(acc, scale(c, e.evaluate(zero, gen_value, add, scale, br)));
        }
        return acc;
    }

private:
    struct Node {
        Kind kind;
        int gen = 0;
        std::vector<std::pair<Int, LieExpr>> terms;
    };
    explicit LieExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

LieExpr substitute(const LieExpr& e, const std::vector<LieExpr>& images);
freelie::LieElement to_lie_element(const LieExpr& e, const freelie::FreeLieRing& ring);
freeassoc::GroupExpr substitute(const freeassoc::GroupExpr& e,
                                const std::vector<freeassoc::GroupExpr>& images);

struct GeneratorDecl {
    std::string name;
    int weight = 1;  // from the shorthand name^(d)
};

struct GroupRelation {
    freeassoc::GroupExpr lhs;
    freeassoc::GroupExpr rhs;
};

struct Presentation {
    Flavor flavor = Flavor::Lie;
    std::string name;
    std::vector<GeneratorDecl> generators;
    std::vector<LieExpr> lie_relators;  // each expression equals zero
    std::vector<GroupRelation> group_relations;
    std::vector<std::pair<std::string, LieExpr>> lie_elements;
    std::vector<std::pair<std::string, freeassoc::GroupExpr>> group_elements;

    std::size_t rank() const { return generators.size(); }
    int generator_index(const std::string& name) const;  // -1 if absent
    std::vector<std::string> generator_names() const;
    std::vector<freelie::Generator> weighted_generators() const;
    const LieExpr& lie_element(const std::string& name) const;
    const freeassoc::GroupExpr& group_element(const std::string& name) const;
};

// Replaces every weight-d generator y (d > 1) by d fresh weight-1 generators
// y_1..y_d and y by their left-normed bracket (commutator for groups).
Presentation expand_shorthand(const Presentation& p);

}  // namespace dimsub::cli
