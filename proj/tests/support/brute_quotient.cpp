#include "brute_quotient.hpp"

namespace oracle {

using namespace dimsub;
using freelie::LieElement;
using intlat::IntMatrix;
using intlat::IntVector;
using intlat::Lattice;

BruteQuotient::BruteQuotient(const cli::Presentation& pres, int c)
    : c_(c), ring_(pres.weighted_generators()), ideal_(0)
{
    for (int w = 1; w <= c; ++w) {
        offset_.push_back(dim_);
        comps_.emplace_back(ring_, w);
        dim_ += comps_.back().dim();
    }

    IntMatrix all(dim_);
    std::vector<LieElement> level;
    for (const auto& r : pres.lie_relators) {
        LieElement e = ring_.truncate(cli::to_lie_element(r, ring_), c);
        if (!e.is_zero()) level.push_back(e);
    }
    while (!level.empty()) {
        IntMatrix m(dim_);
        for (const auto& e : level) m.push_back(coords(e));
        const Lattice basis = intlat::hnf(m);
        std::vector<LieElement> next;
        for (const auto& row : basis.basis().rows) {
            all.push_back(row);
            LieElement u;
            for (int w = 1; w <= c; ++w) {
                const auto part = row.slice(offset_[w - 1], offset_[w - 1] + comps_[w - 1].dim());
                u += comps_[w - 1].element(part);
            }
            for (std::size_t g = 0; g < ring_.rank(); ++g) {
                LieElement b = ring_.bracket_truncated(u, ring_.generator(static_cast<int>(g)), c);
                if (!b.is_zero()) next.push_back(std::move(b));
            }
        }
        level = std::move(next);
    }
    ideal_ = intlat::hnf(all);
}

IntVector BruteQuotient::coords(const LieElement& e) const
{
    IntVector v(dim_);
    for (int w = 1; w <= c_; ++w) {
        const IntVector part = comps_[w - 1].coords(ring_.weight_part(e, w));
        for (std::size_t i = 0; i < part.dim(); ++i) {
            const Int x = part.get(i);
            if (x != 0) v.set(offset_[w - 1] + i, x);
        }
    }
    return v;
}

Lattice BruteQuotient::tail_lattice(int w) const
{
    IntMatrix m(dim_);
    for (const auto& row : ideal_.basis().rows) m.push_back(row);
    if (w <= c_)
        for (std::size_t i = offset_[w - 1]; i < dim_; ++i) m.push_back(IntVector::unit(dim_, i));
    return intlat::hnf(m);
}

std::vector<Int> BruteQuotient::layer_invariants(int w) const
{
    return intlat::quotient_invariants(tail_lattice(w), tail_lattice(w + 1));
}

Int BruteQuotient::order(const cli::LieExpr& e) const
{
    const IntVector v = coords(ring_.truncate(cli::to_lie_element(e, ring_), c_));
    if (intlat::contains(ideal_, v)) return 1;
    Int m = 0;
    for (std::size_t i = 0; i < dim_; ++i) m = gcd(m, v.get(i));
    IntVector prim = v;
    for (std::size_t i = 0; i < dim_; ++i) prim.set(i, v.get(i) / m);
    IntMatrix line(dim_);
    line.push_back(prim);
    const Lattice meet = intlat::intersect(ideal_, intlat::hnf(line));
    if (meet.rank() == 0) return 0;
    const IntVector& r = meet.basis().rows.front();
    Int t = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        if (prim.get(i) != 0) { t = abs(r.get(i) / prim.get(i)); break; }
    return t / gcd(t, m);
}

bool BruteQuotient::is_zero(const cli::LieExpr& e) const { return order(e) == 1; }

}  // namespace oracle
