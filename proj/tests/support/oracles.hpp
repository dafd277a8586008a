#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/intlat.hpp"
#include "dimsub/presentation.hpp"

#include <random>
#include <string>
#include <vector>

namespace oracle {

using dimsub::Int;

// Necklace count (1/n) sum_{d | n} mu(d) k^{n/d}.
Int witt_count(int k, int n);

// Lyndon words of total weight n over letters of the given weights, by
// listing all words and comparing with their rotations.
std::size_t lyndon_count(const std::vector<int>& weights, int n);

struct SignedPerm {
    std::vector<int> perm;
    int sign;
    bool operator==(const SignedPerm&) const = default;
    bool operator<(const SignedPerm& o) const { return perm < o.perm; }
};

// All permutations of {0..2m-1} with rho(2i) < rho(2i+1) for every block and
// rho(2i-1) < rho(2i+1) for 1 <= i < chain, found by filtering all (2m)!
// permutations; sign by counting inversions.
std::vector<SignedPerm> filtered_shuffles(int m, int chain);

// Every tuple of naturals with sum n_i c_i == target, by plain recursion
// over machine integers.
std::vector<std::vector<long>> weighted_compositions(const std::vector<long>& c, long target);

// Determinant by fraction-free elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Smallest t > 0 with t*v in the integer span of independent rows: the lcm of
// the denominators of the rational coordinates of v. 0 when v is outside the
// rational span or t exceeds limit.
Int brute_order(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v, long limit);

// Small random Lie presentation text: up to 4 generators (some of weight 2
// or 3), up to 3 relators, and three named elements e0..e2.
std::string random_lie_presentation(std::mt19937& rng, const std::string& name);

}  // namespace oracle
