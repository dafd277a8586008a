#include "dimsub/presentation.hpp"

#include "dimsub/errors.hpp"

namespace dimsub::cli {

using freeassoc::GroupExpr;

LieExpr LieExpr::generator(int g)
{
    return LieExpr(std::make_shared<const Node>(Node{Kind::Generator, g, {}}));
}

LieExpr LieExpr::sum(std::vector<std::pair<Int, LieExpr>> terms)
{
    return LieExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, std::move(terms)}));
}

LieExpr LieExpr::bracket(LieExpr a, LieExpr b)
{
    std::vector<std::pair<Int, LieExpr>> kids;
    kids.emplace_back(1, std::move(a));
    kids.emplace_back(1, std::move(b));
    return LieExpr(std::make_shared<const Node>(Node{Kind::Bracket, 0, std::move(kids)}));
}

LieExpr LieExpr::left_normed(const std::vector<LieExpr>& xs)
{
    if (xs.empty()) return zero();
    LieExpr acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
    return acc;
}

LieExpr substitute(const LieExpr& e, const std::vector<LieExpr>& images)
{
    switch (e.kind()) {
    case LieExpr::Kind::Generator:
        if (e.gen() < 0 || static_cast<std::size_t>(e.gen()) >= images.size())
            throw InputError("substitute: unmapped generator");
        return images[static_cast<std::size_t>(e.gen())];
    case LieExpr::Kind::Bracket:
        return LieExpr::bracket(substitute(e.left(), images), substitute(e.right(), images));
    case LieExpr::Kind::Sum:
        break;
    }
    std::vector<std::pair<Int, LieExpr>> terms;
    for (const auto& [c, x] : e.terms()) terms.emplace_back(c, substitute(x, images));
    return LieExpr::sum(std::move(terms));
}

freelie::LieElement to_lie_element(const LieExpr& e, const freelie::FreeLieRing& ring)
{
    using freelie::LieElement;
    return e.evaluate(
        LieElement{}, [&](int g) { return ring.generator(g); },
        [](LieElement a, const LieElement& b) { return a += b; },
        [](const Int& c, LieElement a) { return a *= c; },
        [&](const LieElement& a, const LieElement& b) { return ring.bracket(a, b); });
}

GroupExpr substitute(const GroupExpr& e, const std::vector<GroupExpr>& images)
{
    switch (e.kind()) {
    case GroupExpr::Kind::Letter:
        if (e.gen() < 0 || static_cast<std::size_t>(e.gen()) >= images.size())
            throw InputError("substitute: unmapped generator");
        return images[static_cast<std::size_t>(e.gen())];
    case GroupExpr::Kind::Product: {
        std::vector<GroupExpr> fs;
        for (const auto& c : e.children()) fs.push_back(substitute(c, images));
        return GroupExpr::product(std::move(fs));
    }
    case GroupExpr::Kind::Inverse:
        return GroupExpr::inverse(substitute(e.children()[0], images));
    case GroupExpr::Kind::Power:
        return GroupExpr::power(substitute(e.children()[0], images), e.exponent());
    case GroupExpr::Kind::Commutator:
        return GroupExpr::commutator(substitute(e.children()[0], images),
                                     substitute(e.children()[1], images));
    case GroupExpr::Kind::Conjugate:
        return GroupExpr::conjugate(substitute(e.children()[0], images),
                                    substitute(e.children()[1], images));
    }
    return e;
}

int Presentation::generator_index(const std::string& n) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == n) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> Presentation::generator_names() const
{
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.name);
    return out;
}

std::vector<freelie::Generator> Presentation::weighted_generators() const
{
    std::vector<freelie::Generator> out;
    for (const auto& g : generators) out.push_back({g.name, g.weight});
    return out;
}

const LieExpr& Presentation::lie_element(const std::string& n) const
{
    for (const auto& [name, e] : lie_elements)
        if (name == n) return e;
    throw InputError("no element named " + n);
}

const GroupExpr& Presentation::group_element(const std::string& n) const
{
    for (const auto& [name, e] : group_elements)
        if (name == n) return e;
    throw InputError("no element named " + n);
}

Presentation expand_shorthand(const Presentation& p)
{
    Presentation out;
    out.flavor = p.flavor;
    out.name = p.name;
    std::vector<LieExpr> lie_images;
    std::vector<GroupExpr> group_images;
    for (const auto& g : p.generators) {
        if (g.weight == 1) {
            const int idx = static_cast<int>(out.generators.size());
            out.generators.push_back({g.name, 1});
            lie_images.push_back(LieExpr::generator(idx));
            group_images.push_back(GroupExpr::letter(idx));
            continue;
        }
        std::vector<LieExpr> lie_parts;
        std::vector<GroupExpr> group_parts;
        for (int k = 1; k <= g.weight; ++k) {
            const std::string fresh = g.name + "_" + std::to_string(k);
            if (p.generator_index(fresh) >= 0)
                throw InputError("shorthand expansion clashes with generator " + fresh);
            const int idx = static_cast<int>(out.generators.size());
            out.generators.push_back({fresh, 1});
            lie_parts.push_back(LieExpr::generator(idx));
            group_parts.push_back(GroupExpr::letter(idx));
        }
        lie_images.push_back(LieExpr::left_normed(lie_parts));
        GroupExpr acc = group_parts.front();
        for (std::size_t i = 1; i < group_parts.size(); ++i)
            acc = GroupExpr::commutator(acc, group_parts[i]);
        group_images.push_back(acc);
    }
    for (const auto& r : p.lie_relators) out.lie_relators.push_back(substitute(r, lie_images));
    for (const auto& r : p.group_relations)
        out.group_relations.push_back(
            {substitute(r.lhs, group_images), substitute(r.rhs, group_images)});
    for (const auto& [n, e] : p.lie_elements)
        out.lie_elements.emplace_back(n, substitute(e, lie_images));
    for (const auto& [n, e] : p.group_elements)
        out.group_elements.emplace_back(n, substitute(e, group_images));
    return out;
}

}  // namespace dimsub::cli
