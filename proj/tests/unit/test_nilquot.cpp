#include "brute_quotient.hpp"
#include "dimsub/errors.hpp"
#include "dimsub/nilquot.hpp"
#include "dimsub/parser.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dimsub;
using namespace dimsub::nilquot;

TEST_SUITE("nilquot") {

TEST_CASE("power relator twisted by a bracket")
{
    const auto pres = cli::parse_presentation("lie t:\n  x, y;\n  2 x = [x, y];\n  element ex = x;\n");
    const auto& x = pres.lie_element("ex");
    CHECK(order_in_quotient(x, nilpotent_quotient(pres, 1)) == 2);
    const auto nq = nilpotent_quotient(pres, 2);
    CHECK(order_in_quotient(x, nq) == 4);
    const oracle::BruteQuotient b(pres, 2);
    CHECK(b.order(x) == 4);
}

TEST_CASE("free Lie rings have Witt layer ranks")
{
    const auto pres = cli::parse_presentation("lie f:\n  a, b, c;\n  0 a = 0;\n");
    const auto nq = nilpotent_quotient(pres, 5);
    for (int w = 1; w <= 5; ++w) {
        const auto inv = nq.layer_invariants(w);
        CHECK(std::all_of(inv.begin(), inv.end(), [](const Int& d) { return d == 0; }));
        CHECK(Int(static_cast<long>(inv.size())) == oracle::witt_count(3, w));
    }
}

TEST_CASE("random presentations agree with the brute-force quotient")
{
    std::mt19937 rng(2024);
    int tested = 0;
    for (int t = 0; tested < 25 && t < 200; ++t) {
        const auto text = oracle::random_lie_presentation(rng, "r" + std::to_string(t));
        const auto pres = cli::parse_presentation(text);
        const int c = std::uniform_int_distribution<int>(2, 5)(rng);
        const oracle::BruteQuotient b(pres, c);
        if (b.free_dimension() > 1500) continue;
        ++tested;
        CAPTURE(text);
        CAPTURE(c);
        const auto nq = nilpotent_quotient(pres, c);
        for (int w = 1; w <= c; ++w) CHECK(nq.layer_invariants(w) == b.layer_invariants(w));
        for (const auto& [name, e] : pres.lie_elements) CHECK(nq.order(nq.image(e)) == b.order(e));
        CHECK(check_consistency(nq, pres).ok());
    }
    CHECK(tested >= 20);
}

TEST_CASE("weighted generators")
{
    const auto pres = cli::parse_presentation("lie w:\n  a, b, y^(2);\n  4 a = y;\n  element e = [a, b];\n");
    const auto nq = nilpotent_quotient(pres, 3);
    const oracle::BruteQuotient b(pres, 3);
    for (int w = 1; w <= 3; ++w) CHECK(nq.layer_invariants(w) == b.layer_invariants(w));
    CHECK(nq.order(nq.image(pres.lie_element("e"))) == b.order(pres.lie_element("e")));
}

TEST_CASE("membership in the lower central series")
{
    const auto pres = cli::parse_presentation("lie g:\n  x, y;\n  x = [x, y];\n  element ex = x;\n");
    for (int n = 2; n <= 4; ++n) CHECK(in_gamma(pres.lie_element("ex"), n, pres));
    const auto free2 = cli::parse_presentation("lie h:\n  x, y;\n  0 x = 0;\n  element b = [x, y];\n");
    CHECK(in_gamma(free2.lie_element("b"), 2, free2));
    CHECK_FALSE(in_gamma(free2.lie_element("b"), 3, free2));
}

TEST_CASE("generator cap raises a resource limit")
{
    const auto pres = cli::parse_presentation("lie f:\n  a, b, c;\n  0 a = 0;\n");
    Limits l;
    l.max_generators = 10;
    try {
        nilpotent_quotient(pres, 4, l);
        FAIL("expected a resource limit");
    } catch (const ResourceLimit& e) {
        CHECK(e.last_complete_class() == 2);
    }
}

}
