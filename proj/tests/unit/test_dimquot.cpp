#include "dimsub/catalog.hpp"
#include "dimsub/dimquot.hpp"
#include "dimsub/parser.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dimsub;
using namespace dimsub::dimquot;

namespace {

DeltaCertificate certify(const cli::Presentation& pres, const std::string& element, int n, int extra = 0)
{
    SearchOptions o;
    o.extra_degree = extra;
    auto c = delta_certificate_search(pres.lie_element(element), pres, n, o);
    REQUIRE(c.has_value());
    return *c;
}

}  // namespace

TEST_SUITE("dimquot") {

TEST_CASE("a bracket of generators is certified at its own weight")
{
    const auto pres = cli::parse_presentation("lie f:\n  a, b;\n  0 a = 0;\n  element w = [a, b];\n");
    const auto c = certify(pres, "w", 2);
    CHECK(check_certificate(c).ok);
    CHECK_FALSE(delta_certificate_search(pres.lie_element("w"), pres, 3).has_value());
}

TEST_CASE("tampered certificates are rejected")
{
    const auto pres = corpus_presentation("p2_delta8.lie");
    const auto c = certify(pres, "omega", 8);
    REQUIRE(check_certificate(c).ok);
    CHECK(c.vanishing_count() > 0);

    auto bad_coef = c;
    bad_coef.summands.front().coefficient += 1;
    CHECK_FALSE(check_certificate(bad_coef).ok);

    auto bad_weight = c;
    bool changed = false;
    for (auto& s : bad_weight.summands) {
        if (s.vanishes()) continue;
        for (auto& f : s.factors)
            if (f.kind == Factor::Kind::Generator) {
                f.weight += 5;
                changed = true;
                break;
            }
        if (changed) break;
    }
    REQUIRE(changed);
    CHECK_FALSE(check_certificate(bad_weight).ok);

    auto short_claim = c;
    short_claim.claimed_total_weight = 9;
    CHECK_FALSE(check_certificate(short_claim).ok);
}

TEST_CASE("three-relator example needs room above the element degree")
{
    const auto pres = corpus_presentation("rips.lie");
    CHECK_FALSE(delta_certificate_search(pres.lie_element("alpha"), pres, 4).has_value());
    CHECK(check_certificate(certify(pres, "alpha", 4, 2)).ok);
}

TEST_CASE("substitution analysis matches brute-force compositions")
{
    struct Case {
        int p;
        weights::WeightSequence c;
    };
    for (const auto& [p, c] : {Case{2, weights::lemma_sequence(3)}, Case{3, weights::lemma_sequence(5)}}) {
        const auto r = substitution_analysis(p, c);
        std::vector<long> cl;
        for (const auto& x : c.c) cl.push_back(x.get_si());
        CHECK(r.tuples == oracle::weighted_compositions(cl, c.total().get_si()));
        REQUIRE(r.tuples.size() == 1);
        CHECK(r.tuples[0] == weights::Tuple(cl.size(), 1));
        CHECK(r.only_permutations);
    }
    const auto weak = substitution_analysis(2, weights::WeightSequence{3, {Int(1), Int(1), Int(1), Int(1)}});
    CHECK(weak.tuples.size() > 1);
    CHECK_FALSE(weak.only_permutations);
}

TEST_CASE("theorem presentation shape")
{
    const auto seq = weights::lemma_sequence(3);
    const auto t = theorem_presentation(2, seq);
    CHECK(t.rank() == 8);
    CHECK(theorem_class(seq) == 288);
    CHECK_NOTHROW(t.lie_element("omega"));
}

TEST_CASE("Lie-ideal witness for a vanishing element")
{
    const auto pres = corpus_presentation("p2_delta10.lie");
    const auto w = gamma_witness_search(pres.lie_element("omega"), pres, 10);
    REQUIRE(w.has_value());
    CHECK(check_gamma_witness(*w).ok);
    for (const auto& [word, c] : w->residual.terms()) {
        int weight = 0;
        for (auto l : word) weight += pres.generators[static_cast<std::size_t>(l)].weight;
        CHECK(weight >= 10);
    }

    auto tampered = *w;
    tampered.terms.front().coefficient += 1;
    CHECK_FALSE(check_gamma_witness(tampered).ok);
    auto raised = *w;
    raised.n = 11;
    CHECK_FALSE(check_gamma_witness(raised).ok);
}

TEST_CASE("no witness exists for an element outside the ideal")
{
    const auto pres = corpus_presentation("p2_delta8.lie");
    CHECK_FALSE(gamma_witness_search(pres.lie_element("omega"), pres, 8).has_value());
}

TEST_CASE("verdict stages")
{
    const auto v = run_example("p2_delta8");
    CHECK(v.confirmed());
    CHECK(v.order == 2);
    REQUIRE(v.stages.size() == 3);
    CHECK(v.stages[0].name == "delta");
    CHECK(v.failing_stage().empty());
    CHECK_THROWS_AS(find_example("nothing"), InputError);
}

}
