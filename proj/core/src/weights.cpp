#include "dimsub/weights.hpp"

#include "dimsub/errors.hpp"

#include <sstream>

namespace dimsub::weights {

namespace {

constexpr long kMaxTarget = 50'000'000;

WeightSequence power_sequence(int d, const Int& base, int top)
{
    if (d < 2) throw InputError("weight sequences need d >= 2");
    WeightSequence s;
    s.d = d;
    const Int big = ipow(base, static_cast<unsigned long>(top));
    for (int i = 0; i <= d; ++i) s.c.push_back(big - ipow(base, static_cast<unsigned long>(i)));
    return s;
}

}  // namespace

Int WeightSequence::total() const
{
    Int t = 0;
    for (const auto& x : c) t += x;
    return t;
}

std::string WeightSequence::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

WeightSequence lemma_sequence(int d)
{
    return power_sequence(d, d, d + 1);
}

WeightSequence improved_sequence(int d)
{
    return power_sequence(d, 2, d + 1);
}

WeightSequence theorem_sequence(int p)
{
    if (p < 2) throw InputError("theorem_sequence needs p >= 2");
    return power_sequence(2 * p - 1, 2 * p - 1, 2 * p);
}

std::vector<Tuple> solutions(const std::vector<Int>& c, const Int& target, std::size_t limit)
{
    for (const auto& x : c)
        if (x <= 0) throw InputError("weight entries must be positive; zero entries are unsupported");
    if (target < 0 || target > kMaxTarget)
        throw ResourceLimit("weight search target out of range: " + target.get_str(), 0);
    const long t = target.get_si();
    const std::size_t k = c.size();
    std::vector<long> w;
    for (const auto& x : c) w.push_back(x.fits_slong_p() && x <= kMaxTarget ? x.get_si() : kMaxTarget + 1);

    // reach[i][s]: s is a nonnegative combination of w[i..k-1].
    std::vector<std::vector<char>> reach(k + 1, std::vector<char>(static_cast<std::size_t>(t + 1), 0));
    reach[k][0] = 1;
    for (std::size_t i = k; i-- > 0;) {
        auto& r = reach[i];
        r = reach[i + 1];
        for (long s = w[i]; s <= t; ++s)
            if (r[static_cast<std::size_t>(s - w[i])]) r[static_cast<std::size_t>(s)] = 1;
    }

    std::vector<Tuple> out;
    Tuple cur(k, 0);
    auto rec = [&](auto&& self, std::size_t i, long rest) -> void {
        if (out.size() >= limit) return;
        if (i == k) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long n = 0; n * w[i] <= rest; ++n) {
            if (!reach[i + 1][static_cast<std::size_t>(rest - n * w[i])]) continue;
            cur[i] = n;
            self(self, i + 1, rest - n * w[i]);
            if (out.size() >= limit) return;
        }
        cur[i] = 0;
    };
    if (reach[0][static_cast<std::size_t>(t)]) rec(rec, 0, t);
    return out;
}

UniquenessResult check_uniqueness(const WeightSequence& seq)
{
    UniquenessResult r;
    const Tuple ones(seq.c.size(), 1);
    for (auto& s : solutions(seq.c, seq.total(), 4))
        if (s != ones) r.witnesses.push_back(std::move(s));
    r.unique = r.witnesses.empty();
    return r;
}

bool verify_uniqueness(const WeightSequence& seq)
{
    return check_uniqueness(seq).unique;
}

}  // namespace dimsub::weights
