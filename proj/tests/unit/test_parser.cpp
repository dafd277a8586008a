#include "dimsub/corpus.hpp"
#include "dimsub/dimquot.hpp"
#include "dimsub/parser.hpp"

#include <doctest.h>

using namespace dimsub;
using namespace dimsub::cli;

namespace {

const std::string& corpus_file(const std::string& name)
{
    for (const auto& e : corpus::entries())
        if (e.file == name) return e.text;
    throw std::runtime_error("missing corpus file " + name);
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("corpus round-trips through the printer")
{
    REQUIRE(corpus::entries().size() >= 10);
    for (const auto& e : corpus::entries()) {
        CAPTURE(e.file);
        const auto ast = parse_file(e.text);
        const auto printed = ast::print(ast);
        const auto again = parse_file(printed);
        CHECK(ast::equal(ast, again));
        CHECK(ast::print(again) == printed);
        CHECK_NOTHROW(elaborate(ast));
    }
}

TEST_CASE("three-relator example structure")
{
    const auto p = parse_presentation(corpus_file("p3_delta7.lie"));
    CHECK(p.flavor == Flavor::Lie);
    CHECK(p.rank() == 14);
    CHECK(p.lie_relators.size() == 8);
    CHECK(p.generators[4].weight == 2);
    CHECK(p.generators[8].weight == 3);
    CHECK_NOTHROW(p.lie_element("omega"));
    CHECK_THROWS_AS(p.lie_element("nope"), InputError);
    const auto g = parse_presentation(corpus_file("p3_delta7.group"));
    CHECK(g.flavor == Flavor::Group);
}

TEST_CASE("errors carry positions")
{
    try {
        parse_file("lie bad:\n  x0, x1;\n  [x0,] = 0;\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_presentation("lie a:\n  x, x;\n  x = 0;\n"), InputError);
    CHECK_THROWS_AS(parse_presentation("lie a:\n  x, y;\n  [x, z] = 0;\n"), InputError);
    CHECK_THROWS_AS(parse_presentation("lie a:\n  x, y;\n  [x, y = 0;\n"), ParseError);
}

TEST_CASE("shorthand expansion")
{
    const auto p = parse_presentation("lie s:\n  x, y^(3);\n  2 x = y;\n  element w = [x, y];\n");
    const auto e = expand_shorthand(p);
    CHECK(e.rank() == 4);
    for (const auto& g : e.generators) CHECK(g.weight == 1);
    const auto t = dimquot::theorem_presentation(2, weights::lemma_sequence(3));
    CHECK(expand_shorthand(t).rank() == 4 + 81 + 79 + 73 + 55);
}

TEST_CASE("group powers stay symbolic")
{
    const auto e = parse_group_expression("x^531441 y^-3", {"x", "y"});
    REQUIRE(e.kind() == freeassoc::GroupExpr::Kind::Product);
    REQUIRE(e.children().size() == 2);
    CHECK(e.children()[0].kind() == freeassoc::GroupExpr::Kind::Power);
    CHECK(e.children()[0].exponent() == 531441);
    CHECK_THROWS(e.to_word(1000));
    const auto m = freeassoc::magnus_expand(e, 2, 2);
    CHECK(m.coefficient({0}) == 531441);
    CHECK(m.coefficient({1}) == -3);
}

}
