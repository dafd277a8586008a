#pragma once

#include "dimsub/bigint.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dimsub::intlat {

// Integer vector stored sparsely, switching to dense storage once more than
// half of the entries are nonzero (and back below a quarter).
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : dim_(dim) {}

    static IntVector from_dense(const std::vector<Int>& values);
    static IntVector from_entries(std::size_t dim,
                                  std::vector<std::pair<std::size_t, Int>> entries);
    static IntVector unit(std::size_t dim, std::size_t index, const Int& value = 1);

    std::size_t dim() const { return dim_; }
    bool is_dense() const { return dense_; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Int get(std::size_t i) const;
    void set(std::size_t i, const Int& value);
    void add(std::size_t i, const Int& value);

    std::optional<std::size_t> leading() const;
    // Smallest nonzero index strictly greater than `after`.
    std::optional<std::size_t> next_nonzero(std::size_t after) const;

    // *this += q * other.
    void axpy(const Int& q, const IntVector& other);
    void scale(const Int& q);
    void negate();

    std::vector<std::pair<std::size_t, Int>> entries() const;
    std::vector<Int> to_dense() const;

    template <class F>
    void for_each(F&& f) const
    {
        if (dense_) {
            for (std::size_t i = 0; i < dim_; ++i)
                if (dense_data_[i] != 0) f(i, dense_data_[i]);
        } else {
            for (const auto& [i, v] : sparse_) f(i, v);
        }
    }

    // Copy placed at `offset` inside a vector of dimension `new_dim`.
    IntVector embedded(std::size_t new_dim, std::size_t offset) const;
    // Entries with index in [begin, end), re-indexed from zero.
    IntVector slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const IntVector& a, const IntVector& b);

private:
    void rebalance();
    void to_dense_storage();
    void to_sparse_storage();

    std::size_t dim_ = 0;
    bool dense_ = false;
    std::vector<std::pair<std::size_t, Int>> sparse_;
    std::vector<Int> dense_data_;
};

struct IntMatrix {
    std::size_t ncols = 0;
    std::vector<IntVector> rows;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t cols) : ncols(cols) {}
    static IntMatrix from_dense(const std::vector<std::vector<Int>>& values, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t nrows() const { return rows.size(); }
    void push_back(IntVector row);
    Int get(std::size_t i, std::size_t j) const { return rows[i].get(j); }
    std::vector<std::vector<Int>> to_dense() const;
    IntMatrix multiply(const IntMatrix& other) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
};

// Row lattice in Hermite normal form.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient_dim) : basis_(ambient_dim) {}

    std::size_t ambient_dim() const { return basis_.ncols; }
    std::size_t rank() const { return basis_.nrows(); }
    const IntMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

private:
    friend Lattice hnf(const IntMatrix& m);
    friend struct HnfBuilder;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

struct HnfTransform {
    Lattice lattice;
    // transform.rows[k] combines input rows into lattice basis row k.
    IntMatrix transform;
    // Each row combines input rows into the zero vector; together a basis of the left kernel.
    IntMatrix kernel;
};

struct SnfResult {
    std::vector<Int> divisors;  // nonzero diagonal entries, each dividing the next
    std::size_t rank = 0;
    IntMatrix u;  // U * M * V = diag(divisors)
    IntMatrix v;
};

Lattice hnf(const IntMatrix& m);
HnfTransform hnf_with_transform(const IntMatrix& m);
SnfResult snf(const IntMatrix& m, bool with_transforms = true);

std::optional<std::vector<Int>> member(const Lattice& l, const IntVector& v);
bool contains(const Lattice& l, const IntVector& v);

Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);
bool is_sublattice(const Lattice& sub, const Lattice& ambient);

// Abelian invariants of ambient/sub: torsion divisors (> 1) first, then one 0 per free rank.
std::vector<Int> quotient_invariants(const Lattice& ambient, const Lattice& sub);
// Least t > 0 with t*v in l; 0 when no multiple lies in l, 1 when v does.
Int order_modulo(const Lattice& l, const IntVector& v);

// Basis of {x : x * m = 0} in Hermite normal form.
Lattice left_kernel(const IntMatrix& m);

}  // namespace dimsub::intlat
