#include "dimsub/catalog.hpp"
#include "dimsub/nilquot.hpp"
#include "dimsub/report.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace dimsub;
using json = nlohmann::json;

TEST_SUITE("report") {

TEST_CASE("sha256 test vectors")
{
    CHECK(report::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(report::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("quotient reports are deterministic")
{
    const auto& text = dimquot::corpus_text("rips.lie");
    const auto pres = dimquot::corpus_presentation("rips.lie");
    const report::Context ctx{"nq rips.lie --class 3", text, false};
    auto render = [&] {
        const auto q = nilquot::nilpotent_quotient_with_statistics(pres, 3);
        const auto img = q.presentation.image(pres.lie_element("alpha"));
        return report::quotient(pres, q, {{"alpha", img, q.presentation.order(img)}}, 0.5, ctx);
    };
    const auto a = render();
    CHECK(a == render());
    const auto j = json::parse(a);
    CHECK(j["tool"] == "dimsub");
    CHECK(j["version"] == report::kVersion);
    CHECK(j["input_sha256"] == report::sha256_hex(text));
    CHECK_FALSE(j.contains("timings"));
    CHECK(j.dump().find("0.5") == std::string::npos);
}

TEST_CASE("verdict report carries the certificate")
{
    const auto v = dimquot::run_example("p2_delta8");
    const auto j = json::parse(report::verdict(v, {"examples p2_delta8", "", false}));
    CHECK(j["status"] == "pass");
    CHECK(j["result"].contains("certificate"));
    CHECK(j["result"]["order"] == "2");
}

TEST_CASE("error report")
{
    const auto j = json::parse(report::error("input", "bad", {"parse x", "", false}));
    CHECK(j.contains("error"));
}

}
