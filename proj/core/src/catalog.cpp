#include "dimsub/catalog.hpp"

#include "dimsub/corpus.hpp"
#include "dimsub/errors.hpp"
#include "dimsub/parser.hpp"

#include <algorithm>
#include <chrono>

namespace dimsub::dimquot {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string order_text(const Int& o) { return o == 0 ? "infinite" : o.get_str(); }

}  // namespace

const std::vector<ExampleRecord>& catalog()
{
    static const std::vector<ExampleRecord> table = {
        {"rips", "rips.lie", "alpha", 4, 2, 2},
        {"p2_delta10", "p2_delta10.lie", "omega", 10, 2, 0},
        {"p2_delta9", "p2_delta9.lie", "omega", 9, 2, 0},
        {"p2_delta8", "p2_delta8.lie", "omega", 8, 2, 0},
        {"p2_delta4", "p2_delta4.lie", "omega", 4, 2, 0},
        {"p2_delta4_corrected", "p2_delta4.lie", "omega_corrected", 4, 2, 0},
        {"p3_delta7", "p3_delta7.lie", "omega", 7, 3, 0},
    };
    return table;
}

const ExampleRecord& find_example(const std::string& name)
{
    const auto& t = catalog();
    auto it = std::find_if(t.begin(), t.end(), [&](const ExampleRecord& r) { return r.name == name; });
    if (it == t.end()) throw InputError("unknown example '" + name + "'");
    return *it;
}

const std::string& corpus_text(const std::string& file)
{
    for (const auto& e : corpus::entries())
        if (e.file == file) return e.text;
    throw InputError("no bundled presentation '" + file + "'");
}

cli::Presentation corpus_presentation(const std::string& file) { return cli::parse_presentation(corpus_text(file)); }

bool Verdict::confirmed() const
{
    return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.passed; });
}

std::string Verdict::failing_stage() const
{
    for (const auto& s : stages)
        if (!s.passed) return s.name;
    return {};
}

Verdict dimension_check(const cli::Presentation& pres, const std::string& element, int n, int p,
                        const CheckOptions& options)
{
    return dimension_check(pres, pres.lie_element(element), element, n, p, options);
}

Verdict dimension_check(const cli::Presentation& pres, const cli::LieExpr& omega, const std::string& label, int n,
                        int p, const CheckOptions& options)
{
    if (n < 2) throw InputError("n must be at least 2");
    if (p < 2) throw InputError("p must be at least 2");
    if (pres.flavor != cli::Flavor::Lie) throw InputError("dimension checks need a Lie presentation");
    Verdict v;
    v.subject = pres.name;
    v.element = label;
    v.n = n;
    v.p = p;

    auto t0 = std::chrono::steady_clock::now();
    StageResult delta;
    delta.name = "delta";
    v.certificate = delta_certificate_search(omega, pres, n, options.search);
    if (!v.certificate) {
        delta.detail = "no certificate within the degree bound";
    } else {
        const CertificateCheck chk = check_certificate(*v.certificate);
        delta.passed = chk.ok;
        delta.detail = chk.ok ? std::to_string(v.certificate->summands.size()) + " summands verified" : chk.failure;
    }
    delta.seconds = seconds_since(t0);
    v.stages.push_back(delta);

    t0 = std::chrono::steady_clock::now();
    StageResult gamma;
    gamma.name = "gamma";
    const auto nq = nilquot::nilpotent_quotient(pres, n - 1, options.limits);
    v.quotient_size = nq.size();
    v.image = nq.image(omega);
    v.order = nq.order(v.image);
    gamma.passed = v.order != 1;
    gamma.detail = gamma.passed ? "image nonzero at class " + std::to_string(n - 1)
                                : "image vanishes at class " + std::to_string(n - 1);
    gamma.seconds = seconds_since(t0);
    if (!gamma.passed && options.explain_gamma) {
        SearchOptions so = options.search;
        so.max_terms = std::min<std::size_t>(so.max_terms, 200000);
        try {
            v.gamma_witness = gamma_witness_search(omega, pres, n, so);
            if (v.gamma_witness && check_gamma_witness(*v.gamma_witness).ok)
                gamma.detail += "; witness with " + std::to_string(v.gamma_witness->terms.size()) + " ideal terms";
        } catch (const ResourceLimit&) {
        }
        gamma.seconds = seconds_since(t0);
    }
    v.stages.push_back(gamma);

    StageResult order;
    order.name = "order";
    order.passed = v.order == p;
    order.detail = "order " + order_text(v.order) + ", expected " + std::to_string(p);
    v.stages.push_back(order);
    return v;
}

Verdict run_example(const ExampleRecord& rec, CheckOptions options)
{
    options.search.extra_degree = std::max(options.search.extra_degree, rec.extra_degree);
    Verdict v = dimension_check(corpus_presentation(rec.file), rec.element, rec.n, rec.p, options);
    v.subject = rec.name;
    return v;
}

Verdict run_example(const std::string& name) { return run_example(find_example(name)); }

}  // namespace dimsub::dimquot
