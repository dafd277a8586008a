#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/dimquot.hpp"
#include "dimsub/nilquot.hpp"
#include "dimsub/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dimsub::dimquot {

struct ExampleRecord {
    std::string name;
    std::string file;     // corpus entry
    std::string element;  // named element of the presentation
    int n = 0;
    int p = 0;
    int extra_degree = 0;  // certificate search allowance
    std::string expected = "delta-not-gamma";
};

const std::vector<ExampleRecord>& catalog();
// Throws InputError for an unknown name.
const ExampleRecord& find_example(const std::string& name);
// Parses a bundled corpus file, e.g. "rips.lie".
cli::Presentation corpus_presentation(const std::string& file);
const std::string& corpus_text(const std::string& file);

struct StageResult {
    std::string name;  // "delta", "gamma" or "order"
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Verdict {
    std::string subject;
    std::string element;
    int n = 0;
    int p = 0;
    std::vector<StageResult> stages;
    std::optional<DeltaCertificate> certificate;
    nilquot::SparseVec image;  // of the element at class n-1
    Int order;                 // additive order of that image
    std::size_t quotient_size = 0;
    std::optional<GammaWitness> gamma_witness;  // when the element is found in gamma_n

    bool confirmed() const;
    // First failing stage, empty when confirmed.
    std::string failing_stage() const;
};

struct CheckOptions {
    SearchOptions search;
    nilquot::Limits limits = nilquot::Limits::from_environment();
    bool explain_gamma = true;  // look for a witness when the image vanishes
};

// delta_n certificate, nonzero image in L / L_n, and order exactly p.
Verdict dimension_check(const cli::Presentation& pres, const cli::LieExpr& omega, const std::string& label, int n,
                        int p, const CheckOptions& options = {});
Verdict dimension_check(const cli::Presentation& pres, const std::string& element, int n, int p,
                        const CheckOptions& options = {});
Verdict run_example(const ExampleRecord& rec, CheckOptions options = {});
Verdict run_example(const std::string& name);

}  // namespace dimsub::dimquot
