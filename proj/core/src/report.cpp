#include "dimsub/report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace dimsub::report {

using Json = nlohmann::ordered_json;

namespace {

std::string num(const Int& x) { return x.get_str(); }

Json ints(const std::vector<Int>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(num(x));
    return a;
}

Json sparse(const nilquot::SparseVec& v)
{
    Json a = Json::array();
    for (const auto& [i, c] : v) a.push_back(Json::array({i, num(c)}));
    return a;
}

Json header(const Context& ctx)
{
    Json j;
    j["tool"] = "dimsub";
    j["version"] = kVersion;
    j["command"] = ctx.command;
    j["input_sha256"] = sha256_hex(ctx.input);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Factor codes: generator g as g, relator r as -(r+1).
Json certificate_table(const dimquot::DeltaCertificate& cert)
{
    Json t;
    t["claimed_total_weight"] = cert.claimed_total_weight;
    t["vanishing_summands"] = cert.vanishing_count();
    t["product_summands"] = cert.product_count();
    t["columns"] = Json::array({"coefficient", "weight", "factors"});
    Json rows = Json::array();
    for (const auto& s : cert.summands) {
        Json f = Json::array();
        for (const auto& x : s.factors) {
            if (x.kind == dimquot::Factor::Kind::Relator)
                f.push_back(-static_cast<long>(x.index) - 1);
            else
                f.push_back(static_cast<long>(x.index));
        }
        rows.push_back(Json::array({num(s.coefficient), s.weight(), f}));
    }
    t["rows"] = rows;
    return t;
}

Json witness_table(const dimquot::GammaWitness& w)
{
    Json t;
    t["n"] = w.n;
    t["columns"] = Json::array({"coefficient", "relator", "generators"});
    Json rows = Json::array();
    for (const auto& term : w.terms) rows.push_back(Json::array({num(term.coefficient), term.relator, term.generators}));
    t["terms"] = rows;
    Json res = Json::array();
    for (const auto& [word, c] : w.residual.terms()) res.push_back(Json::array({num(c), word}));
    t["residual"] = res;
    return t;
}

Json verdict_body(const dimquot::Verdict& v, const Context& ctx)
{
    Json j;
    j["subject"] = v.subject;
    j["element"] = v.element;
    j["n"] = v.n;
    j["p"] = v.p;
    j["verdict"] = v.confirmed() ? "delta-not-gamma" : "refuted";
    if (!v.confirmed()) j["failing_stage"] = v.failing_stage();
    Json stages = Json::array();
    for (const auto& s : v.stages) {
        Json st;
        st["stage"] = s.name;
        st["passed"] = s.passed;
        st["detail"] = s.detail;
        if (ctx.timings) st["seconds"] = s.seconds;
        stages.push_back(st);
    }
    j["stages"] = stages;
    j["quotient_generators"] = v.quotient_size;
    j["image"] = sparse(v.image);
    j["order"] = num(v.order);
    if (v.certificate) j["certificate"] = certificate_table(*v.certificate);
    if (v.gamma_witness) j["gamma_witness"] = witness_table(*v.gamma_witness);
    return j;
}

std::string definition_text(const nilquot::PcGenerator& g)
{
    using K = nilquot::Definition::Kind;
    switch (g.definition.kind) {
    case K::Generator:
        return "g" + std::to_string(g.definition.first);
    case K::Bracket:
        return "[a" + std::to_string(g.definition.first) + ",a" + std::to_string(g.definition.second) + "]";
    case K::Power:
        return "power a" + std::to_string(g.definition.first);
    }
    return {};
}

}  // namespace

std::string sha256_hex(const std::string& data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

std::string verdict(const dimquot::Verdict& v, const Context& ctx)
{
    Json j = header(ctx);
    j["status"] = v.confirmed() ? "pass" : "refuted";
    j["result"] = verdict_body(v, ctx);
    return dump(j);
}

std::string verdicts(const std::vector<dimquot::Verdict>& vs, const Context& ctx)
{
    Json j = header(ctx);
    bool all = true;
    Json results = Json::array();
    for (const auto& v : vs) {
        all = all && v.confirmed();
        results.push_back(verdict_body(v, ctx));
    }
    j["status"] = all ? "pass" : "refuted";
    j["results"] = results;
    return dump(j);
}

std::string quotient(const cli::Presentation& pres, const nilquot::QuotientResult& q,
                     const std::vector<ElementQuery>& elements, double seconds, const Context& ctx)
{
    const auto& nq = q.presentation;
    Json j = header(ctx);
    j["status"] = "pass";
    j["presentation"] = pres.name;
    j["class"] = nq.nilpotency_class();
    j["generators"] = nq.size();
    Json layers = Json::array();
    for (int w = 1; w <= nq.nilpotency_class(); ++w) {
        Json l;
        l["weight"] = w;
        l["invariants"] = ints(nq.layer_invariants(w));
        layers.push_back(l);
    }
    j["layers"] = layers;
    Json gens = Json::array();
    gens.push_back(Json::array({"weight", "order", "definition", "power"}));
    for (std::size_t i = 0; i < nq.size(); ++i) {
        const auto& g = nq.generators()[i];
        gens.push_back(Json::array({g.weight, num(g.order), definition_text(g), sparse(nq.power(i))}));
    }
    j["pc_generators"] = gens;
    Json els = Json::array();
    for (const auto& e : elements) {
        Json x;
        x["name"] = e.name;
        x["image"] = sparse(e.image);
        x["order"] = num(e.order);
        els.push_back(x);
    }
    j["elements"] = els;
    if (ctx.timings) {
        Json st = Json::array();
        for (const auto& s : q.steps)
            st.push_back({{"weight", s.weight}, {"tails", s.tails}, {"rows", s.consistency_rows},
                          {"new_generators", s.new_generators}});
        j["timings"] = {{"seconds", seconds}, {"steps", st}};
    }
    return dump(j);
}

std::string serre(const SerreSummary& s, const Context& ctx)
{
    Json j = header(ctx);
    bool ok = true;
    j["p"] = s.p;
    Json sh = Json::array();
    for (const auto& x : s.shuffles) sh.push_back({{"permutation", x.perm}, {"sign", x.sign}});
    j["shuffles"] = sh;
    j["element"] = s.element;
    if (s.cycle) {
        const auto& c = *s.cycle;
        ok = ok && c.passed;
        j["cycle"] = {{"passed", c.passed},
                      {"nonzero_faces", c.nonzero_faces},
                      {"boundary_face", c.boundary_face},
                      {"boundary_matches", c.boundary_matches},
                      {"transgression_sign", c.transgression_sign},
                      {"image_sign", c.image_sign},
                      {"detail", c.detail}};
    }
    if (s.retractions) {
        std::vector<bool> r = *s.retractions;
        for (bool b : r) ok = ok && b;
        j["lift"] = s.lift;
        j["retractions"] = r;
    }
    j["status"] = ok ? "pass" : "refuted";
    return dump(j);
}

std::string weights(const std::vector<WeightsEntry>& entries, const Context& ctx)
{
    Json j = header(ctx);
    bool ok = true;
    Json seqs = Json::array();
    for (const auto& e : entries) {
        Json x;
        x["family"] = e.family;
        x["d"] = e.sequence.d;
        x["sequence"] = ints(e.sequence.c);
        x["text"] = e.sequence.to_string();
        if (e.uniqueness) {
            ok = ok && e.uniqueness->unique;
            x["unique"] = e.uniqueness->unique;
            x["witnesses"] = e.uniqueness->witnesses;
        }
        seqs.push_back(x);
    }
    j["status"] = ok ? "pass" : "refuted";
    j["sequences"] = seqs;
    return dump(j);
}

std::string homotopy(const HomotopySummary& h, const Context& ctx)
{
    Json j = header(ctx);
    j["status"] = "pass";
    j["n"] = h.n;
    j["degree"] = h.degree;
    j["invariants"] = ints(h.invariants);
    if (h.alpha_order) j["alpha_order"] = num(*h.alpha_order);
    return dump(j);
}

std::string error(const std::string& kind, const std::string& message, const Context& ctx)
{
    Json j = header(ctx);
    j["status"] = "error";
    j["error"] = {{"kind", kind}, {"message", message}};
    return dump(j);
}

}  // namespace dimsub::report
