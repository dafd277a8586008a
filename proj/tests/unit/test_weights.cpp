#include "dimsub/weights.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dimsub;
using namespace dimsub::weights;

namespace {

std::vector<long> to_long(const WeightSequence& s)
{
    std::vector<long> out;
    for (const auto& c : s.c) out.push_back(c.get_si());
    return out;
}

bool brute_unique(const WeightSequence& s)
{
    const auto c = to_long(s);
    const auto all = oracle::weighted_compositions(c, s.total().get_si());
    return all.size() == 1 && all[0] == std::vector<long>(c.size(), 1);
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("sequence formulas")
{
    CHECK(lemma_sequence(3).to_string() == "(80,78,72,54)");
    CHECK(improved_sequence(2).to_string() == "(7,6,4)");
    const auto t = theorem_sequence(2);
    REQUIRE(t.c.size() == 4);
    CHECK(t.c[0] == 80);
    CHECK(t.c[3] == 54);
}

TEST_CASE("lemma sequences have only the all-ones solution")
{
    for (int d = 2; d <= 5; ++d) {
        const auto s = lemma_sequence(d);
        CHECK(verify_uniqueness(s));
        CHECK(brute_unique(s));
    }
}

TEST_CASE("improved sequences have only the all-ones solution")
{
    for (int d = 2; d <= 6; ++d) {
        const auto s = improved_sequence(d);
        CHECK(verify_uniqueness(s));
        CHECK(brute_unique(s));
    }
}

TEST_CASE("solution enumeration matches brute force")
{
    const std::vector<Int> c{Int(7), Int(5), Int(3)};
    for (long target = 0; target <= 40; ++target) {
        const auto ours = solutions(c, target, 1000);
        const auto brute = oracle::weighted_compositions({7, 5, 3}, target);
        CHECK(ours == brute);
    }
}

TEST_CASE("negative controls")
{
    for (const auto& s : {WeightSequence{1, {Int(1), Int(1)}}, WeightSequence{1, {Int(2), Int(1)}}}) {
        const auto r = check_uniqueness(s);
        CHECK_FALSE(r.unique);
        CHECK_FALSE(r.witnesses.empty());
        CHECK_FALSE(verify_uniqueness(s));
        CHECK_FALSE(brute_unique(s));
    }
}

}
