#pragma once

#include "dimsub/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dimsub::weights {

struct WeightSequence {
    int d = 0;
    std::vector<Int> c;  // c_0, ..., c_d

    Int total() const;
    std::string to_string() const;  // "(c_0,...,c_d)"
};

// c_i = d^{d+1} - d^i
WeightSequence lemma_sequence(int d);
// c_i = 2^{d+1} - 2^i
WeightSequence improved_sequence(int d);
// c_i = (2p-1)^{2p} - (2p-1)^i, i = 0..2p-1
WeightSequence theorem_sequence(int p);

using Tuple = std::vector<long>;

// Tuples n of naturals (0 included) with sum n_i c_i = target, in
// lexicographic order, stopping after `limit` solutions. Entries of c must
// be positive.
std::vector<Tuple> solutions(const std::vector<Int>& c, const Int& target, std::size_t limit);

struct UniquenessResult {
    bool unique = false;
    std::vector<Tuple> witnesses;  // solutions other than (1,...,1), at most a few
};

UniquenessResult check_uniqueness(const WeightSequence& seq);
bool verify_uniqueness(const WeightSequence& seq);

}  // namespace dimsub::weights
