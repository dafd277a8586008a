#include "dimsub/catalog.hpp"
#include "dimsub/corpus.hpp"
#include "dimsub/errors.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/nilquot.hpp"
#include "dimsub/parser.hpp"
#include "dimsub/report.hpp"
#include "dimsub/serre.hpp"
#include "dimsub/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dimsub;

namespace {

enum Exit { kPass = 0, kRefuted = 1, kInput = 2, kResource = 3 };

struct Output {
    bool json = false;
    bool timings = false;
    std::string report_path;
};

std::string read_input(const std::string& path)
{
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    for (const auto& e : corpus::entries())
        if (e.file == path || e.file == std::filesystem::path(path).filename().string()) return e.text;
    throw InputError("no such file: " + path);
}

// JSON goes to stdout with --json, and to --report when given; the summary
// goes to stdout otherwise.
void emit(const Output& out, const std::string& json, const std::string& summary)
{
    if (!out.report_path.empty()) {
        std::ofstream f(out.report_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + out.report_path);
        f << json;
    }
    if (out.json)
        std::cout << json;
    else
        std::cout << summary;
}

std::string join(const std::vector<Int>& xs)
{
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
    return s + "]";
}

std::string order_text(const Int& o) { return o == 0 ? "infinite" : o.get_str(); }

std::string verdict_summary(const dimquot::Verdict& v)
{
    std::ostringstream s;
    s << v.subject << " " << v.element << ": " << (v.confirmed() ? "delta-not-gamma" : "refuted");
    if (!v.confirmed()) s << " at stage " << v.failing_stage();
    s << " (n=" << v.n << ", p=" << v.p << ", order " << order_text(v.order) << ")\n";
    for (const auto& st : v.stages) s << "  " << st.name << ": " << (st.passed ? "ok" : "FAIL") << ", " << st.detail << "\n";
    return s.str();
}

std::string invocation(int argc, char** argv)
{
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dimension subgroup workbench"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "Print the JSON report instead of a summary");
    app.add_flag("--timings", out.timings, "Include timings in the report");
    app.add_option("--report", out.report_path, "Also write the JSON report to this file");

    std::string file, element;
    int cls = 0, n = 0, prime = 0, d = 0, degree = 0;
    bool want_order = false, verify_cycle = false, lift = false, improved = false, verify = false, all = false;
    std::string example;

    auto* nq = app.add_subcommand("nq", "Nilpotent quotient of a Lie presentation");
    nq->add_option("file", file, "Presentation file or bundled corpus name")->required();
    nq->add_option("--class", cls, "Nilpotency class")->required()->check(CLI::Range(1, 1000));
    nq->add_option("--element", element, "Element name or expression");
    nq->add_flag("--order", want_order, "Report additive orders of elements");

    auto* dc = app.add_subcommand("dimcheck", "delta_n / gamma_n verdict for one element");
    dc->add_option("file", file, "Presentation file or bundled corpus name")->required();
    dc->add_option("--element", element, "Element name or expression")->required();
    dc->add_option("--n", n, "Degree")->required()->check(CLI::Range(2, 1000));
    dc->add_option("--prime", prime, "Expected order")->required()->check(CLI::Range(2, 1000000));
    int extra = 0;
    dc->add_option("--extra-degree", extra, "Longer words allowed in the certificate search")->check(CLI::Range(0, 8));

    auto* se = app.add_subcommand("serre", "Serre element, cycle checks and group lift");
    se->add_option("--p", prime, "Prime (2, 3, ...; 4 only with --lift)")->required();
    se->add_flag("--verify-cycle", verify_cycle, "Check the simplicial cycle conditions");
    se->add_flag("--lift", lift, "Check the group lift against its retractions");

    auto* we = app.add_subcommand("weights", "Weight sequences and uniqueness");
    we->add_option("--d", d, "Length parameter")->required()->check(CLI::Range(1, 12));
    we->add_flag("--improved", improved, "Use the improved family");
    we->add_flag("--verify", verify, "Search for non-trivial solutions");

    auto* ho = app.add_subcommand("homotopy", "Intersection modulo symmetric brackets");
    ho->add_option("--n", n, "Number of free generators")->required()->check(CLI::Range(1, 12));
    ho->add_option("--degree", degree, "Degree")->required()->check(CLI::Range(1, 16));

    auto* ex = app.add_subcommand("examples", "Run catalog examples");
    ex->add_option("name", example, "Example name");
    ex->add_flag("--all", all, "Run every example");
    ex->add_flag("--list", verify, "List the catalog");

    auto* pa = app.add_subcommand("parse", "Parse and print a presentation in canonical form");
    pa->add_option("file", file, "Presentation file or bundled corpus name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInput;
    }

    report::Context ctx{invocation(argc, argv), {}, out.timings};
    try {
        if (nq->parsed()) {
            ctx.input = read_input(file);
            const auto pres = cli::parse_presentation(ctx.input);
            if (pres.flavor != cli::Flavor::Lie) throw InputError("nq needs a Lie presentation");
            const auto t0 = std::chrono::steady_clock::now();
            const auto q = nilquot::nilpotent_quotient_with_statistics(pres, cls);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::vector<report::ElementQuery> els;
            auto query = [&](const std::string& name, const cli::LieExpr& e) {
                auto img = q.presentation.image(e);
                els.push_back({name, img, q.presentation.order(img)});
            };
            if (!element.empty()) {
                const int idx = [&] {
                    for (std::size_t i = 0; i < pres.lie_elements.size(); ++i)
                        if (pres.lie_elements[i].first == element) return static_cast<int>(i);
                    return -1;
                }();
                query(element, idx >= 0 ? pres.lie_elements[static_cast<std::size_t>(idx)].second
                                        : cli::parse_lie_expression(element, pres.generator_names()));
            } else if (want_order) {
                for (const auto& [name, e] : pres.lie_elements) query(name, e);
            }
            std::ostringstream s;
            s << pres.name << " class " << cls << ": " << q.presentation.size() << " generators\n";
            for (int w = 1; w <= cls; ++w) s << "  weight " << w << ": " << join(q.presentation.layer_invariants(w)) << "\n";
            for (const auto& e : els) s << "  " << e.name << ": order " << order_text(e.order) << "\n";
            emit(out, report::quotient(pres, q, els, secs, ctx), s.str());
            return kPass;
        }
        if (dc->parsed()) {
            ctx.input = read_input(file);
            const auto pres = cli::parse_presentation(ctx.input);
            dimquot::CheckOptions opts;
            opts.search.extra_degree = extra;
            bool named = false;
            for (const auto& [name, e] : pres.lie_elements) named = named || name == element;
            const auto v = named ? dimquot::dimension_check(pres, element, n, prime, opts)
                                 : dimquot::dimension_check(
                                       pres, cli::parse_lie_expression(element, pres.generator_names()), element, n,
                                       prime, opts);
            emit(out, report::verdict(v, ctx), verdict_summary(v));
            return v.confirmed() ? kPass : kRefuted;
        }
        if (se->parsed()) {
            ctx.input = "serre " + std::to_string(prime);
            report::SerreSummary sum;
            sum.p = prime;
            std::ostringstream s;
            const bool is_p = serre::is_prime(prime);
            if (!is_p && !(lift && prime == 4)) throw InputError("p must be prime");
            if (is_p) {
                sum.shuffles = serre::enumerate_shuffles(prime);
                const auto a = serre::serre_element(prime);
                sum.element = a.ring.ring->to_string(a.element);
                s << "alpha_" << prime << " = " << sum.element << "\n";
                if (verify_cycle) {
                    sum.cycle = serre::verify_cycle(prime);
                    s << "cycle: " << (sum.cycle->passed ? "ok" : "FAIL") << " " << sum.cycle->detail << "\n";
                }
            }
            if (lift) {
                if (prime > 4) throw InputError("group lifts exist for p = 2, 3, 4");
                const auto l = prime == 2 ? serre::lift2() : prime == 3 ? serre::lift3() : serre::lift4();
                sum.lift = l.expression;
                sum.retractions = serre::retraction_checks(l);
                std::size_t ok = 0;
                for (bool b : *sum.retractions) ok += b ? 1 : 0;
                s << "lift: " << ok << "/" << sum.retractions->size() << " retractions trivial\n";
            }
            const auto json = report::serre(sum, ctx);
            emit(out, json, s.str());
            bool pass = !sum.cycle || sum.cycle->passed;
            if (sum.retractions)
                for (bool b : *sum.retractions) pass = pass && b;
            return pass ? kPass : kRefuted;
        }
        if (we->parsed()) {
            ctx.input = "weights " + std::to_string(d) + (improved ? " improved" : "");
            report::WeightsEntry e{improved ? "improved" : "lemma",
                                   improved ? weights::improved_sequence(d) : weights::lemma_sequence(d), {}};
            std::string line = e.sequence.to_string();
            if (verify) {
                e.uniqueness = weights::check_uniqueness(e.sequence);
                line += e.uniqueness->unique ? ": unique" : ": not unique";
            }
            emit(out, report::weights({e}, ctx), line + "\n");
            return !e.uniqueness || e.uniqueness->unique ? kPass : kRefuted;
        }
        if (ho->parsed()) {
            ctx.input = "homotopy " + std::to_string(n) + " " + std::to_string(degree);
            report::HomotopySummary h{n, degree, freelie::homotopy_quotient(n, degree), {}};
            if (degree == n + 1 && degree % 2 == 0 && serre::is_prime(degree / 2)) {
                const auto a = serre::serre_element(degree / 2);
                h.alpha_order = freelie::homotopy_class_order(a.ring, a.element, degree);
            }
            std::string s = join(h.invariants) + "\n";
            if (h.alpha_order) s += "alpha_" + std::to_string(degree / 2) + " class order " + order_text(*h.alpha_order) + "\n";
            emit(out, report::homotopy(h, ctx), s);
            return kPass;
        }
        if (ex->parsed()) {
            if (verify) {
                for (const auto& r : dimquot::catalog())
                    std::cout << r.name << "  " << r.file << "  " << r.element << "  n=" << r.n << " p=" << r.p << "\n";
                return kPass;
            }
            std::vector<dimquot::ExampleRecord> recs;
            if (all)
                recs = dimquot::catalog();
            else if (!example.empty())
                recs.push_back(dimquot::find_example(example));
            else
                throw InputError("give an example name or --all");
            std::vector<dimquot::Verdict> vs;
            std::string summary;
            for (const auto& r : recs) {
                ctx.input += dimquot::corpus_text(r.file);
                vs.push_back(dimquot::run_example(r));
                summary += verdict_summary(vs.back());
            }
            bool pass = true;
            for (const auto& v : vs) pass = pass && v.confirmed();
            emit(out, vs.size() == 1 ? report::verdict(vs[0], ctx) : report::verdicts(vs, ctx), summary);
            return pass ? kPass : kRefuted;
        }
        if (pa->parsed()) {
            ctx.input = read_input(file);
            std::cout << cli::ast::print(cli::parse_file(ctx.input));
            return kPass;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << " (last complete class " << e.last_complete_class() << ")\n";
        if (out.json) std::cout << report::error("resource", e.what(), ctx);
        return kResource;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        if (out.json) std::cout << report::error("input", e.what(), ctx);
        return kInput;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        if (out.json) std::cout << report::error("precondition", e.what(), ctx);
        return kInput;
    }
    return kPass;
}
