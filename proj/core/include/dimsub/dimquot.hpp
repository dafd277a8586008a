#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freeassoc.hpp"
#include "dimsub/presentation.hpp"
#include "dimsub/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dimsub::dimquot {

struct Factor {
    enum class Kind { Generator, Relator };
    Kind kind = Kind::Generator;
    std::size_t index = 0;  // generator or relator index
    int weight = 1;         // declared weight of a generator factor

    friend bool operator==(const Factor&, const Factor&) = default;
};

// coefficient * f_1 * ... * f_k in the enveloping ring. A summand with a
// relator factor vanishes; every other summand must have weight >= n.
struct Summand {
    Int coefficient;
    std::vector<Factor> factors;

    bool vanishes() const;
    int weight() const;  // sum of declared generator weights
};

struct DeltaCertificate {
    cli::Presentation presentation;
    freeassoc::AssocElement target;  // associative expansion of the element
    std::vector<Summand> summands;
    int claimed_total_weight = 0;

    std::size_t vanishing_count() const;
    std::size_t product_count() const;
};

struct SearchOptions {
    // Words longer than the element's expansion by this much may appear;
    // relators that are not linear in the generators need at least 1.
    int extra_degree = 0;
    std::size_t max_terms = 2000000;
};

// Associative expansion of a Lie expression over all generators.
freeassoc::AssocElement expansion(const cli::LieExpr& e, const cli::Presentation& pres);

// Writes the expansion of omega as relator multiples plus products of
// generators of total weight >= n, or returns nothing when no such
// combination exists within the degree bound.
std::optional<DeltaCertificate> delta_certificate_search(const cli::LieExpr& omega,
                                                         const cli::Presentation& pres, int n,
                                                         const SearchOptions& options = {});

struct CertificateCheck {
    bool ok = false;
    std::string failure;
};

// Re-expands every summand from the presentation, re-counts weights and
// compares the sum with the target.
CertificateCheck check_certificate(const DeltaCertificate& cert);
bool verify_certificate(const DeltaCertificate& cert);

// q * [r, g_1, ..., g_k], left-normed, for a relator r.
struct IdealTerm {
    Int coefficient;
    std::size_t relator = 0;
    std::vector<std::size_t> generators;
};

// omega = sum of ideal terms + residual, every residual word of weight >= n.
struct GammaWitness {
    cli::Presentation presentation;
    freeassoc::AssocElement target;
    std::vector<IdealTerm> terms;
    freeassoc::AssocElement residual;
    int n = 0;
};

std::optional<GammaWitness> gamma_witness_search(const cli::LieExpr& omega, const cli::Presentation& pres,
                                                 int n, const SearchOptions& options = {});
CertificateCheck check_gamma_witness(const GammaWitness& w);

struct SubstitutionReport {
    int p = 0;
    weights::WeightSequence c;
    int n = 0;
    std::vector<weights::Tuple> tuples;  // all (n_0..n_{2p-1}) with sum n_i c_i = sum c_i
    bool only_permutations = false;
};

SubstitutionReport substitution_analysis(int p, const weights::WeightSequence& c);

// < x_0..x_{2p-1}, y_i^(1+c_i) | x_0+...+x_{2p-1} = 0, p^{c_i} x_i = y_i >,
// with element omega = p^{sum c} alpha_p written in x_0..x_{2p-2}.
cli::Presentation theorem_presentation(int p, const weights::WeightSequence& c);
int theorem_class(const weights::WeightSequence& c);  // n = 2p + sum c_i

}  // namespace dimsub::dimquot
