#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/presentation.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dimsub::nilquot {

// Sparse integer vector over pc generators, sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Int>>;

struct Definition {
    enum class Kind { Generator, Bracket, Power };
    Kind kind = Kind::Generator;
    std::size_t first = 0;   // presentation generator, left factor, or powered pc generator
    std::size_t second = 0;  // right factor of a bracket
};

struct PcGenerator {
    int weight = 1;
    Int order;  // relative order, 0 when infinite
    Definition definition;
};

struct Limits {
    std::size_t max_generators = 100000;
    std::size_t max_tails = 4000000;
    std::size_t max_coefficient_bits = 1u << 20;

    // Reads DIMSUB_MAX_PC_GENS, DIMSUB_MAX_TAILS and DIMSUB_MAX_COEFF_BITS.
    static Limits from_environment();
};

class Collector;

// Consistent presentation of L / L_{c+1}, where L_k is spanned by brackets of
// total generator weight at least k. Generators are ordered by weight; each
// torsion generator satisfies order * a_i = power(i), a combination of later
// generators, and [a_i, a_j] involves only generators of weight at least
// weight(i) + weight(j).
class NilpotentPresentation {
public:
    int nilpotency_class() const { return class_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<PcGenerator>& generators() const { return gens_; }
    int weight(std::size_t i) const { return gens_[i].weight; }
    std::size_t presentation_rank() const { return images_.size(); }

    const SparseVec& power(std::size_t i) const { return power_[i]; }
    SparseVec comm(std::size_t i, std::size_t j) const;  // [a_i, a_j]
    const SparseVec& generator_image(std::size_t g) const { return images_[g]; }

    SparseVec normal_form(const SparseVec& v) const;
    SparseVec bracket(const SparseVec& a, const SparseVec& b) const;
    SparseVec image(const cli::LieExpr& e) const;
    // Image in L / L_{k+1} for k at most the class.
    SparseVec truncate(const SparseVec& v, int k) const;
    // Additive order of the class of v; 0 when infinite, 1 for zero.
    Int order(const SparseVec& v) const;
    // Abelian invariants of L_w / L_{w+1}: torsion divisors, then one 0 per free rank.
    std::vector<Int> layer_invariants(int w) const;
    std::string to_string() const;

private:
    friend class Collector;
    friend class Builder;

    const SparseVec* comm_entry(std::size_t i, std::size_t j) const;  // i < j, may be null
    std::size_t prefix_length(std::size_t j) const;

    int class_ = 0;
    std::vector<PcGenerator> gens_;
    std::vector<SparseVec> power_;
    std::vector<std::vector<SparseVec>> comm_;  // comm_[j][i] = [a_i, a_j], i < j
    std::vector<SparseVec> images_;
    std::vector<int> pres_weights_;
    std::vector<bool> def_power_;
    std::set<std::pair<std::size_t, std::size_t>> def_comm_;
    std::vector<bool> def_image_;
};

struct StepStatistics {
    int weight = 0;
    std::size_t tails = 0;
    std::size_t consistency_rows = 0;
    std::size_t new_generators = 0;
};

struct QuotientResult {
    NilpotentPresentation presentation;
    std::vector<StepStatistics> steps;
};

// L / L_{c+1} for a Lie presentation with weighted generators.
NilpotentPresentation nilpotent_quotient(const cli::Presentation& pres, int c,
                                         const Limits& limits = Limits::from_environment());
QuotientResult nilpotent_quotient_with_statistics(const cli::Presentation& pres, int c,
                                                  const Limits& limits = Limits::from_environment());

SparseVec image(const cli::LieExpr& e, const NilpotentPresentation& nq);
Int order_in_quotient(const cli::LieExpr& e, const NilpotentPresentation& nq);
// Whether e lies in L_n, using the quotient of class n - 1.
bool in_gamma(const cli::LieExpr& e, int n, const cli::Presentation& pres,
              const Limits& limits = Limits::from_environment());

struct ConsistencyReport {
    std::size_t jacobi_checked = 0;
    std::size_t power_checked = 0;
    std::size_t relators_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Re-evaluates every Jacobi instance, power consequence and relator.
ConsistencyReport check_consistency(const NilpotentPresentation& nq, const cli::Presentation& pres);

}  // namespace dimsub::nilquot
