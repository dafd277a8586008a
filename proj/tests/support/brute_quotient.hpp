#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/intlat.hpp"
#include "dimsub/presentation.hpp"

#include <vector>

namespace oracle {

using dimsub::Int;

// L / L_{c+1} built directly inside the truncated free Lie ring: the relator
// ideal is spanned by relators and their iterated brackets with generators.
class BruteQuotient {
public:
    BruteQuotient(const dimsub::cli::Presentation& pres, int c);

    std::size_t free_dimension() const { return dim_; }
    std::vector<Int> layer_invariants(int w) const;
    Int order(const dimsub::cli::LieExpr& e) const;
    bool is_zero(const dimsub::cli::LieExpr& e) const;

private:
    dimsub::intlat::IntVector coords(const dimsub::freelie::LieElement& e) const;
    dimsub::intlat::Lattice tail_lattice(int w) const;  // I + F_{>=w}

    int c_;
    dimsub::freelie::FreeLieRing ring_;
    std::vector<dimsub::freelie::Component> comps_;
    std::vector<std::size_t> offset_;
    std::size_t dim_ = 0;
    dimsub::intlat::Lattice ideal_;
};

}  // namespace oracle
