#include "dimsub/intlat.hpp"

#include "dimsub/errors.hpp"

#include <algorithm>
#include <string>

namespace dimsub::intlat {

namespace {

void addmul(Int& target, const Int& q, const Int& v)
{
    mpz_addmul(target.get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
}

Int tdiv(const Int& a, const Int& b)
{
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_dim(std::size_t a, std::size_t b, const char* where)
{
    if (a != b)
        throw InputError(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

}  // namespace

// ---------------------------------------------------------------- IntVector

IntVector IntVector::from_dense(const std::vector<Int>& values)
{
    IntVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) v.sparse_.emplace_back(i, values[i]);
    v.rebalance();
    return v;
}

IntVector IntVector::from_entries(std::size_t dim, std::vector<std::pair<std::size_t, Int>> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    IntVector v(dim);
    for (auto& [i, x] : entries) {
        if (i >= dim) throw InputError("IntVector: index out of range");
        if (!v.sparse_.empty() && v.sparse_.back().first == i)
            v.sparse_.back().second += x;
        else
            v.sparse_.emplace_back(i, std::move(x));
        if (v.sparse_.back().second == 0) v.sparse_.pop_back();
    }
    v.rebalance();
    return v;
}

IntVector IntVector::unit(std::size_t dim, std::size_t index, const Int& value)
{
    IntVector v(dim);
    v.set(index, value);
    return v;
}

std::size_t IntVector::nnz() const
{
    if (!dense_) return sparse_.size();
    std::size_t n = 0;
    for (const auto& x : dense_data_)
        if (x != 0) ++n;
    return n;
}

Int IntVector::get(std::size_t i) const
{
    if (dense_) return dense_data_[i];
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), i,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != sparse_.end() && it->first == i) return it->second;
    return 0;
}

void IntVector::set(std::size_t i, const Int& value)
{
    if (i >= dim_) throw InputError("IntVector: index out of range");
    if (dense_) {
        dense_data_[i] = value;
        return;
    }
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), i,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != sparse_.end() && it->first == i) {
        if (value == 0)
            sparse_.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        sparse_.insert(it, {i, value});
        rebalance();
    }
}

void IntVector::add(std::size_t i, const Int& value)
{
    if (value == 0) return;
    if (dense_) {
        dense_data_[i] += value;
        return;
    }
    set(i, get(i) + value);
}

std::optional<std::size_t> IntVector::leading() const
{
    if (dense_) {
        for (std::size_t i = 0; i < dim_; ++i)
            if (dense_data_[i] != 0) return i;
        return std::nullopt;
    }
    if (sparse_.empty()) return std::nullopt;
    return sparse_.front().first;
}

std::optional<std::size_t> IntVector::next_nonzero(std::size_t after) const
{
    if (dense_) {
        for (std::size_t i = after + 1; i < dim_; ++i)
            if (dense_data_[i] != 0) return i;
        return std::nullopt;
    }
    auto it = std::upper_bound(sparse_.begin(), sparse_.end(), after,
                               [](std::size_t k, const auto& e) { return k < e.first; });
    if (it == sparse_.end()) return std::nullopt;
    return it->first;
}

void IntVector::axpy(const Int& q, const IntVector& other)
{
    check_dim(dim_, other.dim_, "axpy");
    if (q == 0) return;
    if (!dense_ && other.dense_) to_dense_storage();
    if (dense_) {
        other.for_each([&](std::size_t i, const Int& v) { addmul(dense_data_[i], q, v); });
        rebalance();
        return;
    }
    std::vector<std::pair<std::size_t, Int>> out;
    out.reserve(sparse_.size() + other.sparse_.size());
    auto a = sparse_.begin();
    auto b = other.sparse_.begin();
    while (a != sparse_.end() || b != other.sparse_.end()) {
        if (b == other.sparse_.end() || (a != sparse_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == sparse_.end() || b->first < a->first) {
            out.emplace_back(b->first, q * b->second);
            ++b;
        } else {
            Int v = std::move(a->second);
            addmul(v, q, b->second);
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    sparse_ = std::move(out);
    rebalance();
}

void IntVector::scale(const Int& q)
{
    if (q == 0) {
        sparse_.clear();
        dense_data_.clear();
        dense_ = false;
        return;
    }
    if (dense_)
        for (auto& x : dense_data_) x *= q;
    else
        for (auto& e : sparse_) e.second *= q;
}

void IntVector::negate()
{
    if (dense_)
        for (auto& x : dense_data_) x = -x;
    else
        for (auto& e : sparse_) e.second = -e.second;
}

std::vector<std::pair<std::size_t, Int>> IntVector::entries() const
{
    if (!dense_) return sparse_;
    std::vector<std::pair<std::size_t, Int>> out;
    for_each([&](std::size_t i, const Int& v) { out.emplace_back(i, v); });
    return out;
}

std::vector<Int> IntVector::to_dense() const
{
    if (dense_) return dense_data_;
    std::vector<Int> out(dim_);
    for (const auto& [i, v] : sparse_) out[i] = v;
    return out;
}

IntVector IntVector::embedded(std::size_t new_dim, std::size_t offset) const
{
    IntVector out(new_dim);
    for_each([&](std::size_t i, const Int& v) {
        if (i + offset >= new_dim) throw InputError("IntVector::embedded: out of range");
        out.sparse_.emplace_back(i + offset, v);
    });
    out.rebalance();
    return out;
}

IntVector IntVector::slice(std::size_t begin, std::size_t end) const
{
    IntVector out(end - begin);
    for_each([&](std::size_t i, const Int& v) {
        if (i >= begin && i < end) out.sparse_.emplace_back(i - begin, v);
    });
    out.rebalance();
    return out;
}

bool operator==(const IntVector& a, const IntVector& b)
{
    if (a.dim_ != b.dim_) return false;
    return a.entries() == b.entries();
}

void IntVector::rebalance()
{
    if (!dense_) {
        if (dim_ >= 8 && 2 * sparse_.size() > dim_) to_dense_storage();
    } else {
        std::size_t n = nnz();
        if (4 * n < dim_) to_sparse_storage();
    }
}

void IntVector::to_dense_storage()
{
    if (dense_) return;
    dense_data_.assign(dim_, Int(0));
    for (auto& [i, v] : sparse_) dense_data_[i] = std::move(v);
    sparse_.clear();
    dense_ = true;
}

void IntVector::to_sparse_storage()
{
    if (!dense_) return;
    sparse_.clear();
    for (std::size_t i = 0; i < dim_; ++i)
        if (dense_data_[i] != 0) sparse_.emplace_back(i, std::move(dense_data_[i]));
    dense_data_.clear();
    dense_ = false;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& values, std::size_t cols)
{
    IntMatrix m(cols);
    for (const auto& row : values) {
        check_dim(row.size(), cols, "IntMatrix::from_dense");
        m.rows.push_back(IntVector::from_dense(row));
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.rows.push_back(IntVector::unit(n, i));
    return m;
}

void IntMatrix::push_back(IntVector row)
{
    check_dim(row.dim(), ncols, "IntMatrix::push_back");
    rows.push_back(std::move(row));
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const
{
    std::vector<std::vector<Int>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.to_dense());
    return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const
{
    check_dim(ncols, other.nrows(), "IntMatrix::multiply");
    IntMatrix out(other.ncols);
    for (const auto& r : rows) {
        IntVector acc(other.ncols);
        r.for_each([&](std::size_t k, const Int& v) { acc.axpy(v, other.rows[k]); });
        out.rows.push_back(std::move(acc));
    }
    return out;
}

// ---------------------------------------------------------------- HNF

struct HnfBuilder {
    struct Item {
        IntVector row;
        IntVector comb;
    };

    static void run(std::vector<Item> items, std::size_t ncols, bool track,
                    std::vector<Item>& out, std::vector<std::size_t>& pivots,
                    std::vector<Item>& zero_rows)
    {
        std::vector<std::vector<Item>> buckets(ncols);
        for (auto& it : items) {
            auto lead = it.row.leading();
            if (lead)
                buckets[*lead].push_back(std::move(it));
            else
                zero_rows.push_back(std::move(it));
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            std::vector<Item> cur = std::move(buckets[c]);
            if (cur.empty()) continue;
            while (cur.size() > 1) {
                std::size_t best = 0;
                Int best_abs = abs(cur[0].row.get(c));
                for (std::size_t i = 1; i < cur.size(); ++i) {
                    Int a = abs(cur[i].row.get(c));
                    if (a < best_abs) {
                        best_abs = a;
                        best = i;
                    }
                }
                Item pivot = std::move(cur[best]);
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best));
                Int pv = pivot.row.get(c);
                std::vector<Item> keep;
                for (auto& it : cur) {
                    Int q = tdiv(it.row.get(c), pv);
                    if (q != 0) {
                        it.row.axpy(-q, pivot.row);
                        if (track) it.comb.axpy(-q, pivot.comb);
                    }
                    if (it.row.get(c) != 0) {
                        keep.push_back(std::move(it));
                    } else {
                        auto lead = it.row.leading();
                        if (lead)
                            buckets[*lead].push_back(std::move(it));
                        else
                            zero_rows.push_back(std::move(it));
                    }
                }
                keep.push_back(std::move(pivot));
                cur = std::move(keep);
            }
            Item p = std::move(cur.front());
            if (p.row.get(c) < 0) {
                p.row.negate();
                if (track) p.comb.negate();
            }
            out.push_back(std::move(p));
            pivots.push_back(c);
        }
        // Reduce entries above pivots into [0, pivot).
        std::vector<long> col_to_row(ncols, -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) col_to_row[pivots[i]] = static_cast<long>(i);
        for (std::size_t k = 0; k < out.size(); ++k) {
            std::size_t col = pivots[k];
            while (true) {
                auto nxt = out[k].row.next_nonzero(col);
                if (!nxt) break;
                col = *nxt;
                long i = col_to_row[col];
                if (i < 0) continue;
                const Item& pr = out[static_cast<std::size_t>(i)];
                Int q = floor_div(out[k].row.get(col), pr.row.get(col));
                if (q != 0) {
                    out[k].row.axpy(-q, pr.row);
                    if (track) out[k].comb.axpy(-q, pr.comb);
                }
            }
        }
    }

    static Lattice make(std::vector<Item>& out, std::vector<std::size_t> pivots, std::size_t ncols)
    {
        Lattice l(ncols);
        for (auto& it : out) l.basis_.rows.push_back(std::move(it.row));
        l.pivots_ = std::move(pivots);
        return l;
    }
};

Lattice hnf(const IntMatrix& m)
{
    std::vector<HnfBuilder::Item> items;
    items.reserve(m.nrows());
    for (const auto& r : m.rows) {
        check_dim(r.dim(), m.ncols, "hnf");
        items.push_back({r, IntVector()});
    }
    std::vector<HnfBuilder::Item> out, zero;
    std::vector<std::size_t> pivots;
    HnfBuilder::run(std::move(items), m.ncols, false, out, pivots, zero);
    return HnfBuilder::make(out, std::move(pivots), m.ncols);
}

HnfTransform hnf_with_transform(const IntMatrix& m)
{
    const std::size_t n = m.nrows();
    std::vector<HnfBuilder::Item> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        check_dim(m.rows[i].dim(), m.ncols, "hnf_with_transform");
        items.push_back({m.rows[i], IntVector::unit(n, i)});
    }
    std::vector<HnfBuilder::Item> out, zero;
    std::vector<std::size_t> pivots;
    HnfBuilder::run(std::move(items), m.ncols, true, out, pivots, zero);
    HnfTransform result;
    result.transform = IntMatrix(n);
    for (const auto& it : out) result.transform.rows.push_back(it.comb);
    IntMatrix kern(n);
    for (auto& it : zero) kern.rows.push_back(std::move(it.comb));
    result.kernel = hnf(kern).basis();
    result.lattice = HnfBuilder::make(out, std::move(pivots), m.ncols);
    return result;
}

Lattice left_kernel(const IntMatrix& m)
{
    IntMatrix k = hnf_with_transform(m).kernel;
    return hnf(k);
}

// ---------------------------------------------------------------- SNF

namespace {

using Dense = std::vector<std::vector<Int>>;

void swap_cols(Dense& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += q * row_j
void row_addmul(Dense& a, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t c = 0; c < a[i].size(); ++c)
        if (a[j][c] != 0) addmul(a[i][c], q, a[j][c]);
}

void col_addmul(Dense& a, std::size_t i, std::size_t j, const Int& q)
{
    for (auto& row : a)
        if (row[j] != 0) addmul(row[i], q, row[j]);
}

}  // namespace

SnfResult snf(const IntMatrix& m, bool with_transforms)
{
    const std::size_t rows = m.nrows();
    const std::size_t cols = m.ncols;
    Dense a = m.to_dense();
    Dense u, v;
    if (with_transforms) {
        u = IntMatrix::identity(rows).to_dense();
        v = IntMatrix::identity(cols).to_dense();
    }
    std::size_t t = 0;
    const std::size_t lim = std::min(rows, cols);
    while (t < lim) {
        // smallest nonzero entry in the trailing block
        std::size_t bi = rows, bj = cols;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    bi = i;
                    bj = j;
                }
        if (bi == rows) break;
        std::swap(a[t], a[bi]);
        if (with_transforms) std::swap(u[t], u[bi]);
        swap_cols(a, t, bj);
        if (with_transforms) swap_cols(v, t, bj);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = -tdiv(a[i][t], a[t][t]);
                row_addmul(a, i, t, q);
                if (with_transforms) row_addmul(u, i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = -tdiv(a[t][j], a[t][t]);
                col_addmul(a, j, t, q);
                if (with_transforms) col_addmul(v, j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remaining entry of row/column t to the pivot
                std::size_t si = t, sj = t;
                Int sbest = abs(a[t][t]);
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < sbest) {
                        sbest = abs(a[i][t]);
                        si = i;
                        sj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < sbest) {
                        sbest = abs(a[t][j]);
                        si = t;
                        sj = j;
                    }
                if (si != t) {
                    std::swap(a[t], a[si]);
                    if (with_transforms) std::swap(u[t], u[si]);
                }
                if (sj != t) {
                    swap_cols(a, t, sj);
                    if (with_transforms) swap_cols(v, t, sj);
                }
                continue;
            }
            // divisibility of the trailing block by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!divides(a[t][t], a[i][j])) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_addmul(a, t, bad, 1);
            if (with_transforms) row_addmul(u, t, bad, 1);
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            if (with_transforms)
                for (auto& x : u[t]) x = -x;
        }
        ++t;
    }
    SnfResult r;
    r.rank = t;
    for (std::size_t i = 0; i < t; ++i) r.divisors.push_back(a[i][i]);
    if (with_transforms) {
        r.u = IntMatrix::from_dense(u, rows);
        r.v = IntMatrix::from_dense(v, cols);
    }
    return r;
}

// ---------------------------------------------------------------- lattice ops

std::optional<std::vector<Int>> member(const Lattice& l, const IntVector& v)
{
    check_dim(v.dim(), l.ambient_dim(), "member");
    IntVector rest = v;
    std::vector<Int> coeffs(l.rank());
    const auto& piv = l.pivots();
    for (std::size_t k = 0; k < l.rank(); ++k) {
        auto lead = rest.leading();
        if (!lead) break;
        if (*lead < piv[k]) return std::nullopt;
        if (*lead > piv[k]) continue;
        const Int p = l.basis().rows[k].get(piv[k]);
        Int x = rest.get(piv[k]);
        if (!divides(p, x)) return std::nullopt;
        Int q = x / p;
        rest.axpy(-q, l.basis().rows[k]);
        coeffs[k] = q;
    }
    if (!rest.is_zero()) return std::nullopt;
    return coeffs;
}

bool contains(const Lattice& l, const IntVector& v) { return member(l, v).has_value(); }

Lattice sum(const Lattice& a, const Lattice& b)
{
    check_dim(a.ambient_dim(), b.ambient_dim(), "sum");
    IntMatrix m(a.ambient_dim());
    for (const auto& r : a.basis().rows) m.rows.push_back(r);
    for (const auto& r : b.basis().rows) m.rows.push_back(r);
    return hnf(m);
}

Lattice intersect(const Lattice& a, const Lattice& b)
{
    check_dim(a.ambient_dim(), b.ambient_dim(), "intersect");
    const std::size_t n = a.ambient_dim();
    IntMatrix m(2 * n);
    for (const auto& r : a.basis().rows) {
        IntVector row = r.embedded(2 * n, 0);
        row.axpy(1, r.embedded(2 * n, n));
        m.rows.push_back(std::move(row));
    }
    for (const auto& r : b.basis().rows) m.rows.push_back(r.embedded(2 * n, 0));
    Lattice h = hnf(m);
    IntMatrix right(n);
    for (std::size_t k = 0; k < h.rank(); ++k)
        if (h.pivots()[k] >= n) right.rows.push_back(h.basis().rows[k].slice(n, 2 * n));
    return hnf(right);
}

bool is_sublattice(const Lattice& sub, const Lattice& ambient)
{
    if (sub.ambient_dim() != ambient.ambient_dim()) return false;
    for (const auto& r : sub.basis().rows)
        if (!contains(ambient, r)) return false;
    return true;
}

Int order_modulo(const Lattice& l, const IntVector& v)
{
    check_dim(l.ambient_dim(), v.dim(), "order_modulo");
    if (v.is_zero()) return 1;
    IntMatrix line(v.dim());
    line.push_back(v);
    const Lattice meet = intersect(l, hnf(line));
    if (meet.rank() == 0) return 0;
    const std::size_t j = *v.leading();
    Int t = meet.basis().rows[0].get(j) / v.get(j);
    return abs(t);
}

std::vector<Int> quotient_invariants(const Lattice& ambient, const Lattice& sub)
{
    check_dim(ambient.ambient_dim(), sub.ambient_dim(), "quotient_invariants");
    IntMatrix coords(ambient.rank());
    for (const auto& r : sub.basis().rows) {
        auto c = member(ambient, r);
        if (!c) throw PreconditionError("quotient_invariants: sub is not contained in ambient");
        coords.rows.push_back(IntVector::from_dense(*c));
    }
    // Triangularize first so the dense SNF works on a small square block.
    Lattice tri = hnf(coords);
    SnfResult s = snf(tri.basis(), false);
    std::vector<Int> out;
    for (const auto& d : s.divisors)
        if (d != 1) out.push_back(d);
    for (std::size_t i = s.rank; i < ambient.rank(); ++i) out.push_back(0);
    return out;
}

}  // namespace dimsub::intlat
