#include "dimsub/freelie.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dimsub;
using namespace dimsub::freelie;

namespace {

std::vector<Generator> letters(int k)
{
    std::vector<Generator> g;
    for (int i = 0; i < k; ++i) g.push_back({"x" + std::to_string(i), 1});
    return g;
}

LieElement random_element(const FreeLieRing& r, std::mt19937& rng, int weight)
{
    std::uniform_int_distribution<int> c(-3, 3);
    LieElement e;
    for (BasisId b : r.component(weight)) e.add(b, c(rng));
    return e;
}

}  // namespace

TEST_SUITE("freelie") {

TEST_CASE("basis sizes follow the necklace formula")
{
    for (int k = 1; k <= 4; ++k) {
        FreeLieRing r(letters(k));
        for (int n = 1; n <= 7; ++n) CHECK(Int(static_cast<long>(r.component(n).size())) == oracle::witt_count(k, n));
    }
    FreeLieRing r3(letters(3));
    CHECK(r3.component(4).size() == 18);
}

TEST_CASE("weighted basis counts")
{
    const std::vector<int> w{1, 1, 2, 3};
    FreeLieRing r({{"a", 1}, {"b", 1}, {"c", 2}, {"d", 3}});
    for (int n = 1; n <= 7; ++n) CHECK(r.component(n).size() == oracle::lyndon_count(w, n));
}

TEST_CASE("bracket is alternating and satisfies Jacobi")
{
    FreeLieRing r(letters(3));
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_element(r, rng, 1), b = random_element(r, rng, 2), c = random_element(r, rng, 1);
        CHECK(r.bracket(a, a).is_zero());
        CHECK(r.bracket(a, b) == -r.bracket(b, a));
        const auto j = r.bracket(r.bracket(a, b), c) + r.bracket(r.bracket(b, c), a) + r.bracket(r.bracket(c, a), b);
        CHECK(j.is_zero());
    }
}

TEST_CASE("ideal component agrees with brute-force span")
{
    FreeLieRing r(letters(3));
    const LieElement g = r.generator(0);
    for (int d = 2; d <= 5; ++d) {
        const Component comp(r, d);
        std::vector<LieElement> spanning;
        for (int k = 1; k < d; ++k) {
            const intlat::Lattice lower = ideal_component(r, g, k);
            const Component ck(r, k);
            for (const auto& row : lower.basis().rows)
                for (BasisId b : r.component(d - k)) spanning.push_back(r.bracket(ck.element(row), r.basis_element(b)));
        }
        CHECK(ideal_component(r, g, d) == comp.span(spanning));
    }
}

TEST_CASE("intersection by lattices equals intersection by retractions")
{
    PuncturedRing pr = punctured_ring(3);
    for (int d = 3; d <= 5; ++d)
        CHECK(intersection_component(*pr.ring, pr.xi, d) == intersection_component_by_retractions(*pr.ring, pr.xi, d));
}

TEST_CASE("homotopy quotients in low degree")
{
    CHECK(homotopy_quotient(3, 3).empty());
    CHECK(homotopy_quotient(3, 4) == std::vector<Int>{2});
    CHECK(homotopy_quotient(3, 5).empty());
    PuncturedRing pr = punctured_ring(3);
    const auto& x = pr.xi;
    const LieElement a2 = pr.ring->bracket(pr.ring->bracket(x[0], x[2]), pr.ring->bracket(x[1], x[2]));
    CHECK(homotopy_class_order(pr, a2, 4) == 2);
}

TEST_CASE("substitution is a ring homomorphism")
{
    FreeLieRing src(letters(2)), dst(letters(3));
    const std::vector<LieElement> images{dst.generator(0) + dst.generator(1), dst.bracket(dst.generator(1), dst.generator(2))};
    const auto a = src.generator(0), b = src.generator(1);
    const auto lhs = substitute(src, src.bracket(a, src.bracket(a, b)), dst, images);
    const auto rhs = dst.bracket(images[0], dst.bracket(images[0], images[1]));
    CHECK(lhs == rhs);
}

}
