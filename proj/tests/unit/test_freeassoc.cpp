#include "dimsub/freeassoc.hpp"
#include "dimsub/groupword.hpp"
#include "dimsub/serre.hpp"

#include <doctest.h>

#include <random>

using namespace dimsub;
using namespace dimsub::freeassoc;

namespace {

AssocElement X(std::size_t alphabet, int l) { return AssocElement::letter(alphabet, l); }

}  // namespace

TEST_SUITE("freeassoc") {

TEST_CASE("expansion of a bracket")
{
    freelie::FreeLieRing r({{"a", 1}, {"b", 1}});
    const auto e = lie_expand(r, r.bracket(r.generator(0), r.generator(1)));
    CHECK(e == multiply(X(2, 0), X(2, 1)) - multiply(X(2, 1), X(2, 0)));
}

TEST_CASE("Dynkin map multiplies Lie elements by their degree")
{
    freelie::FreeLieRing r({{"a", 1}, {"b", 1}, {"c", 1}});
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int n = 1; n <= 5; ++n) {
        freelie::LieElement x;
        for (auto b : r.component(n)) x.add(b, c(rng));
        const auto e = lie_expand(r, x);
        CHECK(dynkin(e) == Int(n) * e);
    }
}

TEST_CASE("associative rewriting of alpha_2")
{
    const auto a = serre::serre_element(2);
    const std::size_t g = 3;
    const AssocElement x3 = -(X(g, 0) + X(g, 1) + X(g, 2));
    auto br = [](const AssocElement& u, const AssocElement& v) { return commutator(u, v); };
    const AssocElement rhs = multiply(br(X(g, 2), x3), br(X(g, 0), X(g, 1))) +
                             multiply(br(X(g, 1), X(g, 2)), br(X(g, 0), x3)) -
                             multiply(br(X(g, 0), X(g, 2)), br(X(g, 1), x3));
    CHECK(rhs == lie_expand(*a.ring.ring, a.element));
}

TEST_CASE("weight-redistributing rewriting with all e_3 terms cancelling")
{
    const std::size_t g = 4;
    auto e = [&](int i) { return X(g, i); };
    auto p3 = [](unsigned k) {
        Int r;
        mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
        return r;
    };
    auto m3 = [](const AssocElement& a, const AssocElement& b, const AssocElement& c) {
        return multiply(multiply(a, b), c);
    };
    const AssocElement b23 = p3(9) * e(2) + p3(10) * e(3);
    const AssocElement b13 = p3(9) * e(1) + p3(11) * e(3);
    const AssocElement b02 = p3(10) * e(0) + p3(12) * e(2);
    const AssocElement b01 = p3(11) * e(0) + p3(12) * e(1);
    const AssocElement sum = -m3(e(0), b23, e(1)) - m3(e(1), b23, e(0)) + m3(e(0), b13, e(2)) + m3(e(2), b13, e(0)) +
                             m3(b02, e(3), e(1)) + m3(e(1), e(3), b02) - m3(b01, e(3), e(2)) - m3(e(2), e(3), b01);
    const AssocElement expect =
        p3(9) * (m3(e(0), e(1), e(2)) - m3(e(0), e(2), e(1)) - m3(e(1), e(2), e(0)) + m3(e(2), e(1), e(0)));
    CHECK(sum == expect);
    freelie::FreeLieRing r({{"e0", 1}, {"e1", 1}, {"e2", 1}, {"e3", 1}});
    const auto omega = r.left_normed({r.generator(2), r.generator(1), r.generator(0)});
    CHECK(p3(9) * lie_expand(r, omega) == expect);
}

TEST_CASE("Magnus expansion basics")
{
    const auto x = GroupWord::generator(0), y = GroupWord::generator(1);
    CHECK(magnus_expand(x, 2, 3) == AssocElement::one(2, 3) + AssocElement::letter(2, 0, 3));
    const auto inv = magnus_expand(inverse(x), 2, 3);
    CHECK(inv.coefficient({0}) == -1);
    CHECK(inv.coefficient({0, 0}) == 1);
    CHECK(inv.coefficient({0, 0, 0}) == -1);
    const auto c = magnus_expand(commutator(x, y), 2, 2) - AssocElement::one(2, 2);
    CHECK(c == commutator(AssocElement::letter(2, 0, 2), AssocElement::letter(2, 1, 2)));
}

TEST_CASE("binomial expansion of powers")
{
    const auto g = product(GroupWord::generator(0), commutator(GroupWord::generator(1), GroupWord::generator(0)));
    for (long k : {2L, 3L, 7L, -4L}) {
        const auto lhs = magnus_expand(power(g, k), 2, 5);
        const auto rhs = series_power(magnus_expand(g, 2, 5), k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lifted alpha_2 lies in the symmetric product at leading degree")
{
    const auto w = serre::lift_word(serre::lift2());
    const auto m = magnus_expand(w, 3, 4) - AssocElement::one(3, 4);
    for (std::size_t d = 0; d <= 3; ++d) CHECK(m.part(d).is_zero());
    const AssocElement x3 = -(X(3, 0) + X(3, 1) + X(3, 2));
    const SymmetricProduct sp({X(3, 0), X(3, 1), X(3, 2), x3}, 4);
    const AssocElement top = m.part(4);
    CHECK_FALSE(top.is_zero());
    const auto cert = sp.certificate(top);
    REQUIRE(cert.has_value());
    CHECK(sp.component().coords(sp.expand(*cert)) == sp.component().coords(top));
    CHECK_FALSE(sp.contains(AssocElement::word(3, {0, 0, 0, 0})));
}

}
