#include "dimsub/intlat.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dimsub;
using namespace dimsub::intlat;

namespace {

std::vector<std::vector<Int>> random_square(std::mt19937& rng, std::size_t n, int range)
{
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

Int product(const std::vector<Int>& xs)
{
    Int p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

}  // namespace

TEST_SUITE("intlat") {

TEST_CASE("sparse and dense storage agree")
{
    IntVector v(10);
    for (std::size_t i = 0; i < 10; ++i) v.set(i, Int(static_cast<long>(i)) - 4);
    CHECK(v.is_dense());
    for (std::size_t i = 0; i < 10; ++i) v.set(i, i == 7 ? 3 : 0);
    const auto u = IntVector::unit(10, 7, 3);
    CHECK_FALSE(u.is_dense());
    CHECK(v.nnz() == 1);
    CHECK(v == u);
    CHECK(v.leading() == std::optional<std::size_t>(7));
    CHECK(u.leading() == std::optional<std::size_t>(7));
}

TEST_CASE("known Smith form")
{
    const auto m = IntMatrix::from_dense({{2, 4}, {6, 8}}, 2);
    const auto s = snf(m);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] == 4);
    CHECK(s.u.multiply(m).multiply(s.v) == IntMatrix::from_dense({{2, 0}, {0, 4}}, 2));
}

TEST_CASE("Hermite form spans the input rows and has determinant index")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto dense = random_square(rng, n, 9);
        const auto m = IntMatrix::from_dense(dense, n);
        const Lattice l = hnf(m);
        for (const auto& r : m.rows) CHECK(contains(l, r));
        const Int det = oracle::bareiss_determinant(dense);
        if (det == 0) {
            CHECK(l.rank() < n);
            continue;
        }
        CHECK(l.rank() == n);
        const auto inv = quotient_invariants(hnf(IntMatrix::identity(n)), l);
        CHECK(product(inv) == abs(det));
        const auto s = snf(m, false);
        CHECK(product(s.divisors) == abs(det));
        for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    }
}

TEST_CASE("transform reproduces basis and kernel")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto dense = random_square(rng, 4, 5);
        dense.push_back(dense[0]);
        for (std::size_t j = 0; j < 4; ++j) dense[4][j] += 2 * dense[1][j];
        const auto m = IntMatrix::from_dense(dense, 4);
        const auto t = hnf_with_transform(m);
        CHECK(t.transform.multiply(m) == t.lattice.basis());
        for (const auto& k : t.kernel.rows) {
            IntMatrix single(m.nrows());
            single.push_back(k);
            CHECK(single.multiply(m).rows[0].is_zero());
        }
    }
}

TEST_CASE("intersection and sum of coordinate lattices")
{
    const Lattice a = hnf(IntMatrix::from_dense({{2, 0}, {0, 1}}, 2));
    const Lattice b = hnf(IntMatrix::from_dense({{1, 0}, {0, 3}}, 2));
    CHECK(intersect(a, b) == hnf(IntMatrix::from_dense({{2, 0}, {0, 3}}, 2)));
    CHECK(sum(a, b) == hnf(IntMatrix::identity(2)));
    CHECK(is_sublattice(intersect(a, b), a));
}

TEST_CASE("order modulo a lattice matches rational solving")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dense = random_square(rng, 3, 6);
        if (oracle::bareiss_determinant(dense) == 0) continue;
        std::vector<Int> v(3);
        for (auto& x : v) x = d(rng);
        const Int expect = oracle::brute_order(dense, v, 1000000);
        CHECK(order_modulo(hnf(IntMatrix::from_dense(dense, 3)), IntVector::from_dense(v)) == expect);
    }
    const Lattice line = hnf(IntMatrix::from_dense({{4, 0, 0}}, 3));
    CHECK(order_modulo(line, IntVector::from_dense({Int(1), Int(0), Int(0)})) == 4);
    CHECK(order_modulo(line, IntVector::from_dense({Int(0), Int(1), Int(0)})) == 0);
}

TEST_CASE("left kernel")
{
    const auto m = IntMatrix::from_dense({{1, 2}, {2, 4}, {0, 1}}, 2);
    const Lattice k = left_kernel(m);
    REQUIRE(k.rank() == 1);
    CHECK(k.basis().multiply(m).rows[0].is_zero());
}

}
