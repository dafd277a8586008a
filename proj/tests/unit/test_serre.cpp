#include "dimsub/freeassoc.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/parser.hpp"
#include "dimsub/serre.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dimsub;
using namespace dimsub::serre;

namespace {

std::set<std::pair<std::vector<int>, int>> as_set(const std::vector<Shuffle>& s)
{
    std::set<std::pair<std::vector<int>, int>> out;
    for (const auto& x : s) out.insert({x.perm, x.sign});
    return out;
}

freelie::LieElement evaluate(const SerreElement& a, const std::string& text, int gens)
{
    std::vector<std::string> names;
    for (int i = 0; i < gens; ++i) names.push_back("x" + std::to_string(i));
    const auto e = cli::parse_lie_expression(text, names);
    const auto& r = *a.ring.ring;
    return e.evaluate(
        freelie::LieElement{}, [&](int g) { return a.ring.xi[static_cast<std::size_t>(g)]; },
        [](freelie::LieElement x, const freelie::LieElement& y) { return x += y; },
        [](const Int& c, freelie::LieElement x) { return x *= c; },
        [&](const freelie::LieElement& x, const freelie::LieElement& y) { return r.bracket(x, y); });
}

}  // namespace

TEST_SUITE("serre") {

TEST_CASE("shuffle enumeration agrees with filtered permutations")
{
    for (int p : {2, 3, 5}) {
        const auto ours = enumerate_shuffles(p);
        const auto brute = oracle::filtered_shuffles(p - 1, p - 2);
        std::set<std::pair<std::vector<int>, int>> expect;
        for (const auto& s : brute) expect.insert({s.perm, s.sign});
        CHECK(as_set(ours) == expect);
        CHECK(ours.size() == brute.size());
    }
    CHECK(enumerate_shuffles(2).size() == 1);
}

TEST_CASE("shuffle table at p = 3")
{
    const std::vector<Shuffle> expect{{{0, 1, 2, 3}, 1},  {{0, 2, 1, 3}, -1}, {{0, 3, 1, 2}, 1},
                                      {{2, 3, 0, 1}, 1},  {{1, 3, 0, 2}, -1}, {{1, 2, 0, 3}, 1}};
    CHECK(as_set(enumerate_shuffles(3)) == as_set(expect));
}

TEST_CASE("explicit Serre elements")
{
    const auto a2 = serre_element(2);
    CHECK(a2.element == evaluate(a2, "[[x0,x2],[x1,x2]]", 3));
    const auto a3 = serre_element(3);
    const char* display =
        "[[x0,x4],[x1,x4],[x2,x3]] - [[x0,x4],[x2,x4],[x1,x3]] + [[x0,x4],[x3,x4],[x1,x2]]"
        " + [[x1,x4],[x2,x4],[x0,x3]] - [[x1,x4],[x3,x4],[x0,x2]] + [[x2,x4],[x3,x4],[x0,x1]]";
    CHECK(a3.element == evaluate(a3, display, 5));
}

TEST_CASE("every term uses the last free generator twice")
{
    for (int p : {2, 3}) {
        const auto a = serre_element(p);
        const auto expanded = freeassoc::lie_expand(*a.ring.ring, a.element);
        CHECK_FALSE(expanded.is_zero());
        for (const auto& [w, c] : expanded.terms()) {
            CHECK(w.size() == static_cast<std::size_t>(2 * p));
            CHECK(std::count(w.begin(), w.end(), 2 * p - 2) == 2);
        }
    }
}

TEST_CASE("cycle verification")
{
    for (int p : {2, 3}) {
        const auto r = verify_cycle(p);
        CHECK(r.passed);
        CHECK(r.boundary_matches);
        CHECK(r.nonzero_faces == std::vector<int>{2 * p - 1});
        CHECK(r.boundary_face == 2 * p - 1);
        CHECK(r.image_sign != 0);
    }
}

TEST_CASE("flipping a shuffle sign breaks the cycle")
{
    for (int p : {2, 3}) {
        const int n = static_cast<int>(enumerate_shuffles(p).size());
        for (int f = 0; f < n; ++f) CHECK_FALSE(check_cycle(p, beta_tilde(p, f)).passed);
    }
}

TEST_CASE("group lifts lie in every normal subgroup")
{
    const auto c2 = retraction_checks(lift2());
    const auto c3 = retraction_checks(lift3());
    const auto c4 = retraction_checks(lift4());
    CHECK(c2.size() == 4);
    CHECK(c3.size() == 6);
    CHECK(c4.size() == 6);
    for (const auto& c : {c2, c3, c4})
        for (bool ok : c) CHECK(ok);
    CHECK(lift3_factors().size() == 14);
}

TEST_CASE("alpha_2 is a nonzero class of order two")
{
    const auto a = serre_element(2);
    const auto sym = freelie::symmetric_bracket_component(*a.ring.ring, a.ring.xi, 4);
    const freelie::Component comp(*a.ring.ring, 4);
    CHECK_FALSE(intlat::contains(sym, comp.coords(a.element)));
    CHECK(intlat::contains(sym, comp.coords(Int(2) * a.element)));
}

}
