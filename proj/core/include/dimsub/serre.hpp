#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/groupword.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dimsub::serre {

bool is_prime(int p);

struct Shuffle {
    std::vector<int> perm;
    int sign = 1;
    friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

// Permutations of {0..2m-1} with increasing blocks rho(2i) < rho(2i+1) whose
// first `chain` block maxima rho(1) < rho(3) < ... increase.
std::vector<Shuffle> block_shuffles(int m, int chain);

// The signed shuffles indexing the terms of alpha_p.
std::vector<Shuffle> enumerate_shuffles(int p);

struct SerreElement {
    freelie::PuncturedRing ring;  // x_0..x_{2p-2} free, x_{2p-1} alias
    freelie::LieElement element;
};

SerreElement serre_element(int p);
freelie::LieElement serre_element(int p, const freelie::PuncturedRing& ring);

// Generator (i1 i2) of K(Z,2) in simplicial degree `level`.
struct SimplicialPair {
    int i1 = 0;
    int i2 = 1;
    int level = 2;
    friend auto operator<=>(const SimplicialPair&, const SimplicialPair&) = default;
};

std::optional<SimplicialPair> face(int j, const SimplicialPair& x);

// Combination of sequences of pairs at one level. With a tensor leg the last
// factor is distinguished and the others form a symmetric product, kept
// sorted; without one every factor is symmetric.
class PairTensor {
public:
    using Key = std::vector<SimplicialPair>;

    explicit PairTensor(bool tensor_leg = true) : tensor_leg_(tensor_leg) {}

    void add(Key factors, const Int& c);
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PairTensor face(int j) const;
    std::string to_string() const;

    friend bool operator==(const PairTensor&, const PairTensor&) = default;

private:
    bool tensor_leg_ = true;
    std::map<Key, Int> terms_;
};

// beta~; flip >= 0 negates the sign of that shuffle (for negative controls).
PairTensor beta_tilde(int p, int flip = -1);
// The symmetric element beta, all factors in one sorted product.
PairTensor beta(int p);
// The closed-form boundary sum, at level 2p-1.
PairTensor displayed_boundary(int p);

// Formal left-normed bracket of pairs.
struct PairBracket {
    std::vector<SimplicialPair> entries;
    Int coefficient = 1;
};

std::vector<PairBracket> long_element(int p);
// [b1,...,bn] -> b2...bn (x) b1 - b1 b3...bn (x) b2
PairTensor bra2tens(const std::vector<PairBracket>& xs);
// Pairs (i j) -> [x_i, x_j] in the punctured ring on 2p-1 generators.
freelie::LieElement bracket_image(const std::vector<PairBracket>& xs,
                                  const freelie::PuncturedRing& ring);

struct CycleReport {
    int p = 0;
    std::vector<int> nonzero_faces;
    int boundary_face = -1;          // the single nonzero face, if any
    bool boundary_matches = false;   // equals displayed_boundary(p)
    int transgression_sign = 0;      // d(beta~) = sign * bra2tens(long_element)
    int image_sign = 0;              // bracket_image(long_element) = sign * alpha_p
    bool passed = false;
    std::string detail;
};

CycleReport verify_cycle(int p);
CycleReport check_cycle(int p, const PairTensor& beta_t);

// Group lifts in parser syntax.
struct GroupLift {
    std::string name;
    std::vector<std::string> generators;
    std::string expression;
    // One substitution per normal subgroup R_i, each letter mapped to a word
    // in parser syntax.
    std::vector<std::vector<std::string>> retractions;
};

GroupLift lift2();
GroupLift lift3();
GroupLift lift4();
// Individual factors of lift3 / lift4 in parser syntax.
const std::vector<std::string>& lift3_factors();
const std::vector<std::string>& lift4_factors();

freeassoc::GroupWord lift_word(const GroupLift& lift);
// Whether the lift maps to the empty word under every retraction.
std::vector<bool> retraction_checks(const GroupLift& lift);

}  // namespace dimsub::serre
