#include "dimsub/nilquot.hpp"

#include "dimsub/errors.hpp"
#include "dimsub/intlat.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dimsub::nilquot {

namespace {

std::size_t env_size(const char* name, std::size_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (end == v || *end) throw InputError(std::string("malformed value for ") + name);
    return static_cast<std::size_t>(x);
}

SparseVec unit(std::size_t i, const Int& c = 1) { return {{i, c}}; }

}  // namespace

Limits Limits::from_environment()
{
    Limits l;
    l.max_generators = env_size("DIMSUB_MAX_PC_GENS", l.max_generators);
    l.max_tails = env_size("DIMSUB_MAX_TAILS", l.max_tails);
    l.max_coefficient_bits = env_size("DIMSUB_MAX_COEFF_BITS", l.max_coefficient_bits);
    return l;
}

// ---------------------------------------------------------------- collection

// Dense accumulator; take() returns the normal form, emitting indices in
// increasing order while power relations push excess into later generators.
class Collector {
public:
    explicit Collector(const NilpotentPresentation& pc)
        : pc_(pc), val_(pc.size()), mark_(pc.size(), 0)
    {
    }

    void add(std::size_t i, const Int& c)
    {
        if (c == 0) return;
        touch(i);
        val_[i] += c;
    }

    void addmul(std::size_t i, const Int& a, const Int& b)
    {
        touch(i);
        mpz_addmul(val_[i].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }

    void add(const SparseVec& v, const Int& c = 1)
    {
        for (const auto& [i, x] : v) addmul(i, x, c);
    }

    // Adds c * [a, b].
    void add_bracket(const SparseVec& a, const SparseVec& b, const Int& c = 1)
    {
        Int xy;
        for (const auto& [i, x] : a) {
            const int wi = pc_.gens_[i].weight;
            for (const auto& [j, y] : b) {
                if (i == j || wi + pc_.gens_[j].weight > pc_.class_) continue;
                const SparseVec* e = i < j ? pc_.comm_entry(i, j) : pc_.comm_entry(j, i);
                if (!e || e->empty()) continue;
                xy = x * y * c;
                if (i > j) xy = -xy;
                for (const auto& [k, z] : *e) addmul(k, xy, z);
            }
        }
    }

    SparseVec take()
    {
        SparseVec out;
        Int q;
        while (!heap_.empty()) {
            const std::size_t i = heap_.top();
            heap_.pop();
            mark_[i] = 0;
            Int& x = val_[i];
            if (x == 0) continue;
            const Int& e = pc_.gens_[i].order;
            if (e > 0 && (x < 0 || x >= e)) {
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t());
                mpz_submul(x.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t());
                for (const auto& [k, z] : pc_.power_[i]) addmul(k, q, z);
            }
            if (x != 0) out.emplace_back(i, std::move(x));
            x = 0;
        }
        return out;
    }

private:
    void touch(std::size_t i)
    {
        if (!mark_[i]) {
            mark_[i] = 1;
            heap_.push(i);
        }
    }

    const NilpotentPresentation& pc_;
    std::vector<Int> val_;
    std::vector<char> mark_;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap_;
};

// ---------------------------------------------------------------- queries

std::size_t NilpotentPresentation::prefix_length(std::size_t j) const
{
    const int limit = class_ - gens_[j].weight;
    std::size_t n = 0;
    while (n < j && gens_[n].weight <= limit) ++n;
    return n;
}

const SparseVec* NilpotentPresentation::comm_entry(std::size_t i, std::size_t j) const
{
    const auto& row = comm_[j];
    return i < row.size() ? &row[i] : nullptr;
}

SparseVec NilpotentPresentation::comm(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size()) throw InputError("pc generator index out of range");
    if (i == j) return {};
    const SparseVec* e = i < j ? comm_entry(i, j) : comm_entry(j, i);
    if (!e) return {};
    SparseVec out = *e;
    if (i > j)
        for (auto& [k, x] : out) x = -x;
    return out;
}

SparseVec NilpotentPresentation::normal_form(const SparseVec& v) const
{
    Collector c(*this);
    for (const auto& [i, x] : v) {
        if (i >= size()) throw InputError("pc generator index out of range");
        c.add(i, x);
    }
    return c.take();
}

SparseVec NilpotentPresentation::bracket(const SparseVec& a, const SparseVec& b) const
{
    Collector c(*this);
    c.add_bracket(a, b);
    return c.take();
}

namespace {

SparseVec evaluate(const NilpotentPresentation& pc, Collector& col, const cli::LieExpr& e,
                   const std::function<const SparseVec&(std::size_t)>& gen)
{
    return e.evaluate(
        SparseVec{},
        [&](int g) { return gen(static_cast<std::size_t>(g)); },
        [&](const SparseVec& a, const SparseVec& b) {
            col.add(a);
            col.add(b);
            return col.take();
        },
        [&](const Int& c, const SparseVec& a) {
            col.add(a, c);
            return col.take();
        },
        [&](const SparseVec& a, const SparseVec& b) {
            (void)pc;
            col.add_bracket(a, b);
            return col.take();
        });
}

}  // namespace

SparseVec NilpotentPresentation::image(const cli::LieExpr& e) const
{
    Collector col(*this);
    return evaluate(*this, col, e, [&](std::size_t g) -> const SparseVec& {
        if (g >= images_.size()) throw InputError("expression uses an unknown generator");
        return images_[g];
    });
}

SparseVec NilpotentPresentation::truncate(const SparseVec& v, int k) const
{
    if (k > class_) throw InputError("truncation above the computed class");
    SparseVec out;
    for (const auto& [i, x] : normal_form(v))
        if (gens_[i].weight <= k) out.emplace_back(i, x);
    return out;
}

Int NilpotentPresentation::order(const SparseVec& v) const
{
    SparseVec cur = normal_form(v);
    Int result = 1;
    while (!cur.empty()) {
        const auto& [i, x] = cur.front();
        const Int& e = gens_[i].order;
        if (e == 0) return 0;
        const Int m = e / gcd(x, e);
        result *= m;
        for (auto& [k, y] : cur) y *= m;
        cur = normal_form(cur);
    }
    return result;
}

std::vector<Int> NilpotentPresentation::layer_invariants(int w) const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i)
        if (gens_[i].weight == w) idx.push_back(i);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
    intlat::IntMatrix rows(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto i = idx[k];
        if (gens_[i].order == 0) continue;
        intlat::IntVector r(idx.size());
        r.set(k, gens_[i].order);
        for (const auto& [j, x] : power_[i]) {
            auto it = pos.find(j);
            if (it != pos.end()) r.add(it->second, -x);
        }
        rows.push_back(std::move(r));
    }
    return intlat::quotient_invariants(intlat::hnf(intlat::IntMatrix::identity(idx.size())),
                                       intlat::hnf(rows));
}

std::string NilpotentPresentation::to_string() const
{
    std::ostringstream os;
    auto vec = [&](const SparseVec& v) {
        if (v.empty()) return std::string("0");
        std::ostringstream s;
        bool first = true;
        for (const auto& [i, x] : v) {
            if (!first) s << (x < 0 ? " - " : " + ");
            else if (x < 0) s << "-";
            first = false;
            const Int a = abs(x);
            if (a != 1) s << a << "*";
            s << "a" << i;
        }
        return s.str();
    };
    os << "class " << class_ << ", " << size() << " generators\n";
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& g = gens_[i];
        os << "a" << i << " weight " << g.weight;
        if (g.order != 0) os << " order " << g.order << " : " << g.order << "*a" << i << " = " << vec(power_[i]);
        os << "\n";
    }
    for (std::size_t j = 0; j < size(); ++j)
        for (std::size_t i = 0; i < comm_[j].size(); ++i)
            if (!comm_[j][i].empty()) os << "[a" << i << ",a" << j << "] = " << vec(comm_[j][i]) << "\n";
    for (std::size_t g = 0; g < images_.size(); ++g) os << "g" << g << " -> " << vec(images_[g]) << "\n";
    return os.str();
}

// ---------------------------------------------------------------- the step

namespace {

// Consistency rows, reduced in one Hermite normal form at the end.
class RowCollector {
public:
    explicit RowCollector(std::size_t dim) : rows_(dim) {}

    void insert(intlat::IntVector r)
    {
        if (!r.is_zero()) rows_.push_back(std::move(r));
    }

    intlat::Lattice lattice() const { return intlat::hnf(rows_); }

private:
    intlat::IntMatrix rows_;
};

struct Tail {
    enum class Kind { Power, Bracket, Image };
    Kind kind;
    std::size_t first;
    std::size_t second;
    int category;  // 0 least preferred as a new generator
};

}  // namespace

class Builder {
public:
    Builder(const cli::Presentation& pres, const Limits& limits) : pres_(pres), limits_(limits) {}

    NilpotentPresentation start() const
    {
        NilpotentPresentation pc;
        pc.class_ = 0;
        for (const auto& g : pres_.generators) {
            if (g.weight < 1) throw InputError("generator weights must be positive");
            pc.pres_weights_.push_back(g.weight);
        }
        pc.images_.assign(pres_.rank(), {});
        pc.def_image_.assign(pres_.rank(), false);
        return pc;
    }

    NilpotentPresentation step(const NilpotentPresentation& cur, StepStatistics& stats) const
    {
        const int c = cur.class_;
        const int w = c + 1;
        const std::size_t n_old = cur.size();

        // Extended presentation with central tails of weight w.
        NilpotentPresentation ext = cur;
        ext.class_ = w;
        std::vector<Tail> tails;
        auto new_tail = [&](Tail t) {
            if (tails.size() >= limits_.max_tails)
                throw ResourceLimit("tail count exceeds the configured cap", c);
            tails.push_back(t);
            PcGenerator g;
            g.weight = w;
            g.order = 0;
            ext.gens_.push_back(g);
            ext.power_.emplace_back();
            ext.comm_.emplace_back();
            ext.def_power_.push_back(false);
            return n_old + tails.size() - 1;
        };

        for (std::size_t i = 0; i < n_old; ++i)
            if (cur.gens_[i].order != 0 && !cur.def_power_[i])
            {
                const std::size_t t = new_tail({Tail::Kind::Power, i, 0, 0});
                ext.power_[i].emplace_back(t, 1);
            }
        for (std::size_t j = 0; j < n_old; ++j) {
            const std::size_t len = ext.prefix_length(j);
            ext.comm_[j].resize(len);
            for (std::size_t i = 0; i < len; ++i) {
                if (cur.def_comm_.count({i, j})) continue;
                const int wsum = cur.gens_[i].weight + cur.gens_[j].weight;
                const int minw = std::min(cur.gens_[i].weight, cur.gens_[j].weight);
                const int cat = wsum < w ? 0 : (minw > 1 ? 1 : 2);
                const std::size_t t = new_tail({Tail::Kind::Bracket, i, j, cat});
                ext.comm_[j][i].emplace_back(t, 1);
            }
        }
        for (std::size_t g = 0; g < pres_.rank(); ++g) {
            const int wg = cur.pres_weights_[g];
            if (wg > w || cur.def_image_[g]) continue;
            const std::size_t t = new_tail({Tail::Kind::Image, g, 0, wg < w ? 0 : 3});
            ext.images_[g].emplace_back(t, 1);
        }
        const std::size_t nt = tails.size();
        stats.weight = w;
        stats.tails = nt;

        // Preference order of tail columns.
        std::vector<std::size_t> order(nt);
        for (std::size_t t = 0; t < nt; ++t) order[t] = t;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return tails[a].category < tails[b].category;
        });
        std::vector<std::size_t> col_of(nt);
        for (std::size_t k = 0; k < nt; ++k) col_of[order[k]] = k;

        RowCollector ech(nt);
        Collector col(ext);
        std::size_t nrows = 0;
        auto consume = [&](const SparseVec& v, const char* what) {
            intlat::IntVector row(nt);
            for (const auto& [i, x] : v) {
                if (i < n_old)
                    throw std::logic_error(std::string("nilpotent quotient: inconsistent ") + what +
                                           " at weight " + std::to_string(w));
                row.set(col_of[i - n_old], x);
            }
            ++nrows;
            ech.insert(std::move(row));
        };

        // Jacobi identities.
        for (std::size_t i = 0; i < n_old; ++i) {
            const int wi = cur.gens_[i].weight;
            if (3 * wi > w) break;
            for (std::size_t j = i + 1; j < n_old; ++j) {
                const int wj = cur.gens_[j].weight;
                if (wi + 2 * wj > w) break;
                for (std::size_t k = j + 1; k < n_old; ++k) {
                    if (wi + wj + cur.gens_[k].weight > w) break;
                    col.add_bracket(ext.comm(i, j), unit(k));
                    col.add_bracket(ext.comm(j, k), unit(i));
                    col.add_bracket(ext.comm(k, i), unit(j));
                    consume(col.take(), "Jacobi identity");
                }
            }
        }
        // Power relations against brackets.
        for (std::size_t k = 0; k < n_old; ++k) {
            const Int& e = cur.gens_[k].order;
            if (e == 0) continue;
            for (std::size_t j = 0; j < n_old; ++j) {
                if (cur.gens_[k].weight + cur.gens_[j].weight > w) break;
                col.add(ext.comm(k, j), e);
                col.add_bracket(ext.power_[k], unit(j), -1);
                consume(col.take(), "power relation");
            }
        }
        // Defining relators.
        for (const auto& r : pres_.lie_relators) {
            consume(evaluate(ext, col, r, [&](std::size_t g) -> const SparseVec& { return ext.images_[g]; }),
                    "relator");
        }
        stats.consistency_rows = nrows;

        const intlat::Lattice lat = ech.lattice();
        return assemble(cur, ext, tails, order, lat, stats);
    }

private:
    NilpotentPresentation assemble(const NilpotentPresentation& cur, const NilpotentPresentation& ext,
                                   const std::vector<Tail>& tails, const std::vector<std::size_t>& order,
                                   const intlat::Lattice& lat, StepStatistics& stats) const
    {
        const int w = ext.class_;
        const std::size_t n_old = cur.size();
        const std::size_t nt = tails.size();

        std::vector<long> pivot_row(nt, -1);
        for (std::size_t r = 0; r < lat.rank(); ++r) pivot_row[lat.pivots()[r]] = static_cast<long>(r);
        auto is_unit_pivot = [&](std::size_t col) {
            return pivot_row[col] >= 0 && lat.basis().rows[static_cast<std::size_t>(pivot_row[col])].get(col) == 1;
        };

        std::vector<long> new_index(nt, -1);
        std::size_t count = 0;
        for (std::size_t k = 0; k < nt; ++k)
            if (!is_unit_pivot(k)) new_index[k] = static_cast<long>(n_old + count++);
        stats.new_generators = count;
        if (n_old + count > limits_.max_generators)
            throw ResourceLimit("pc generator count exceeds the configured cap", cur.class_);

        NilpotentPresentation next;
        next.class_ = w;
        next.gens_ = cur.gens_;
        next.power_ = cur.power_;
        next.def_power_ = cur.def_power_;
        next.def_comm_ = cur.def_comm_;
        next.def_image_ = cur.def_image_;
        next.pres_weights_ = cur.pres_weights_;

        // New generators, in column order.
        for (std::size_t k = 0; k < nt; ++k) {
            if (new_index[k] < 0) continue;
            const Tail& t = tails[order[k]];
            PcGenerator g;
            g.weight = w;
            g.order = pivot_row[k] >= 0 ? lat.basis().rows[static_cast<std::size_t>(pivot_row[k])].get(k) : Int(0);
            switch (t.kind) {
            case Tail::Kind::Power:
                g.definition = {Definition::Kind::Power, t.first, 0};
                next.def_power_[t.first] = true;
                break;
            case Tail::Kind::Bracket:
                g.definition = {Definition::Kind::Bracket, t.first, t.second};
                next.def_comm_.insert({t.first, t.second});
                break;
            case Tail::Kind::Image:
                g.definition = {Definition::Kind::Generator, t.first, 0};
                next.def_image_[t.first] = true;
                break;
            }
            next.gens_.push_back(g);
            next.power_.emplace_back();
            next.def_power_.push_back(false);
        }
        next.comm_.assign(next.gens_.size(), {});

        // Value of each tail column in the new generators.
        std::vector<SparseVec> value(nt);
        for (std::size_t k = 0; k < nt; ++k) {
            if (new_index[k] >= 0) {
                value[k] = unit(static_cast<std::size_t>(new_index[k]));
                if (pivot_row[k] >= 0) {
                    SparseVec p;
                    lat.basis().rows[static_cast<std::size_t>(pivot_row[k])].for_each(
                        [&](std::size_t q, const Int& x) {
                            if (q != k) p.emplace_back(static_cast<std::size_t>(new_index[q]), -x);
                        });
                    next.power_[static_cast<std::size_t>(new_index[k])] = std::move(p);
                }
            } else {
                lat.basis().rows[static_cast<std::size_t>(pivot_row[k])].for_each(
                    [&](std::size_t q, const Int& x) {
                        if (q == k) return;
                        if (new_index[q] < 0) throw std::logic_error("unreduced unit pivot column");
                        value[k].emplace_back(static_cast<std::size_t>(new_index[q]), -x);
                    });
            }
        }
        for (std::size_t k = 0; k < nt; ++k)
            if (value[k].size() > 1)
                std::sort(value[k].begin(), value[k].end());

        // Normalize the new power relations from the last generator backwards.
        for (std::size_t idx = next.gens_.size(); idx-- > n_old;) {
            if (next.gens_[idx].order == 0) continue;
            Collector c(next);
            c.add(next.power_[idx]);
            next.power_[idx] = c.take();
        }

        Collector col(next);
        // Map tail index to column once.
        std::vector<std::size_t> column(nt);
        for (std::size_t k = 0; k < nt; ++k) column[order[k]] = k;
        auto subst = [&](const SparseVec& v) {
            for (const auto& [i, x] : v) {
                if (i < n_old)
                    col.add(i, x);
                else
                    col.add(value[column[i - n_old]], x);
            }
            SparseVec out = col.take();
            check_size(out, cur.class_);
            return out;
        };

        for (std::size_t i = 0; i < n_old; ++i) next.power_[i] = subst(ext.power_[i]);
        for (std::size_t j = 0; j < n_old; ++j) {
            next.comm_[j].resize(ext.comm_[j].size());
            for (std::size_t i = 0; i < ext.comm_[j].size(); ++i) next.comm_[j][i] = subst(ext.comm_[j][i]);
        }
        next.images_.resize(ext.images_.size());
        for (std::size_t g = 0; g < ext.images_.size(); ++g) next.images_[g] = subst(ext.images_[g]);
        return next;
    }

    void check_size(const SparseVec& v, int last_class) const
    {
        for (const auto& [i, x] : v)
            if (bit_size(x) > limits_.max_coefficient_bits)
                throw ResourceLimit("coefficient size exceeds the configured cap", last_class);
    }

    const cli::Presentation& pres_;
    Limits limits_;
};

QuotientResult nilpotent_quotient_with_statistics(const cli::Presentation& pres, int c, const Limits& limits)
{
    if (pres.flavor != cli::Flavor::Lie) throw InputError("nilpotent quotients need a Lie presentation");
    if (c < 1) throw InputError("class must be at least 1");
    Builder b(pres, limits);
    QuotientResult out{b.start(), {}};
    for (int k = 1; k <= c; ++k) {
        StepStatistics s;
        out.presentation = b.step(out.presentation, s);
        out.steps.push_back(s);
    }
    return out;
}

NilpotentPresentation nilpotent_quotient(const cli::Presentation& pres, int c, const Limits& limits)
{
    return nilpotent_quotient_with_statistics(pres, c, limits).presentation;
}

SparseVec image(const cli::LieExpr& e, const NilpotentPresentation& nq)
{
    return nq.image(e);
}

Int order_in_quotient(const cli::LieExpr& e, const NilpotentPresentation& nq)
{
    return nq.order(nq.image(e));
}

bool in_gamma(const cli::LieExpr& e, int n, const cli::Presentation& pres, const Limits& limits)
{
    if (n < 2) throw InputError("in_gamma needs n >= 2");
    return nilpotent_quotient(pres, n - 1, limits).image(e).empty();
}

ConsistencyReport check_consistency(const NilpotentPresentation& nq, const cli::Presentation& pres)
{
    ConsistencyReport rep;
    const std::size_t n = nq.size();
    const int c = nq.nilpotency_class();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (nq.weight(i) + nq.weight(j) + nq.weight(k) > c) continue;
                ++rep.jacobi_checked;
                SparseVec s;
                for (auto v : {nq.bracket(nq.comm(i, j), unit(k)), nq.bracket(nq.comm(j, k), unit(i)),
                               nq.bracket(nq.comm(k, i), unit(j))})
                    s.insert(s.end(), v.begin(), v.end());
                if (!nq.normal_form(s).empty())
                    rep.failures.push_back("Jacobi (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + ")");
            }
    for (std::size_t k = 0; k < n; ++k) {
        const Int& e = nq.generators()[k].order;
        if (e == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (nq.weight(k) + nq.weight(j) > c) continue;
            ++rep.power_checked;
            SparseVec s = nq.bracket(unit(k, e), unit(j));
            for (auto& [i, x] : nq.bracket(nq.power(k), unit(j))) s.emplace_back(i, -x);
            if (!nq.normal_form(s).empty())
                rep.failures.push_back("power consequence (" + std::to_string(k) + "," + std::to_string(j) + ")");
        }
    }
    for (std::size_t r = 0; r < pres.lie_relators.size(); ++r) {
        ++rep.relators_checked;
        if (!nq.image(pres.lie_relators[r]).empty()) rep.failures.push_back("relator " + std::to_string(r));
    }
    return rep;
}

}  // namespace dimsub::nilquot
