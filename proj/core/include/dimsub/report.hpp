#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/catalog.hpp"
#include "dimsub/nilquot.hpp"
#include "dimsub/presentation.hpp"
#include "dimsub/serre.hpp"
#include "dimsub/weights.hpp"

#include <optional>
#include <string>
#include <vector>

// JSON reports. Keys keep insertion order and big integers are written as
// decimal strings, so output is byte-for-byte reproducible unless timings are
// requested.
namespace dimsub::report {

inline constexpr const char* kVersion = "0.1.0";

struct Context {
    std::string command;  // the invocation, e.g. "nq rips.lie --class 3"
    std::string input;    // hashed into input_sha256
    bool timings = false;
};

std::string sha256_hex(const std::string& data);

std::string verdict(const dimquot::Verdict& v, const Context& ctx);
std::string verdicts(const std::vector<dimquot::Verdict>& vs, const Context& ctx);

struct ElementQuery {
    std::string name;
    nilquot::SparseVec image;
    Int order;
};

std::string quotient(const cli::Presentation& pres, const nilquot::QuotientResult& q,
                     const std::vector<ElementQuery>& elements, double seconds, const Context& ctx);

struct SerreSummary {
    int p = 0;
    std::vector<serre::Shuffle> shuffles;
    std::string element;
    std::optional<serre::CycleReport> cycle;
    std::optional<std::vector<bool>> retractions;
    std::string lift;
};
std::string serre(const SerreSummary& s, const Context& ctx);

struct WeightsEntry {
    std::string family;  // "lemma" or "improved"
    weights::WeightSequence sequence;
    std::optional<weights::UniquenessResult> uniqueness;
};
std::string weights(const std::vector<WeightsEntry>& entries, const Context& ctx);

struct HomotopySummary {
    int n = 0;
    int degree = 0;
    std::vector<Int> invariants;
    std::optional<Int> alpha_order;  // when degree = n + 1 and n + 1 is twice a prime
};
std::string homotopy(const HomotopySummary& h, const Context& ctx);

std::string error(const std::string& kind, const std::string& message, const Context& ctx);

}  // namespace dimsub::report
