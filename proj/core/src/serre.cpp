#include "dimsub/serre.hpp"

#include "dimsub/errors.hpp"
#include "dimsub/parser.hpp"

#include <algorithm>
#include <sstream>

namespace dimsub::serre {

using freelie::LieElement;

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

int parity_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

void require_prime(int p)
{
    if (!is_prime(p)) throw InputError("p must be a prime, got " + std::to_string(p));
}

}  // namespace

std::vector<Shuffle> block_shuffles(int m, int chain)
{
    if (m < 0) throw InputError("block_shuffles: negative block count");
    std::vector<Shuffle> out;
    std::vector<int> perm;
    std::vector<bool> used(static_cast<std::size_t>(2 * m), false);
    auto rec = [&](auto&& self, int block) -> void {
        if (block == m) {
            out.push_back({perm, parity_sign(perm)});
            return;
        }
        for (int a = 0; a < 2 * m; ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            for (int b = a + 1; b < 2 * m; ++b) {
                if (used[static_cast<std::size_t>(b)]) continue;
                if (block > 0 && block < chain && b < perm[static_cast<std::size_t>(2 * block - 1)])
                    continue;
                used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
                perm.push_back(a);
                perm.push_back(b);
                self(self, block + 1);
                perm.resize(perm.size() - 2);
                used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = false;
            }
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Shuffle> enumerate_shuffles(int p)
{
    require_prime(p);
    return block_shuffles(p - 1, p - 2);
}

LieElement serre_element(int p, const freelie::PuncturedRing& pr)
{
    require_prime(p);
    const auto& ring = *pr.ring;
    const auto& x = pr.xi;
    if (x.size() != static_cast<std::size_t>(2 * p))
        throw InputError("serre_element: ring must have 2p-1 generators");
    const auto top = static_cast<std::size_t>(2 * p - 2);
    LieElement total;
    for (const auto& s : enumerate_shuffles(p)) {
        auto at = [&](std::size_t i) { return static_cast<std::size_t>(s.perm[i]); };
        std::vector<LieElement> parts;
        parts.push_back(ring.bracket(x[at(0)], x[top]));
        parts.push_back(ring.bracket(x[at(1)], x[top]));
        for (std::size_t i = 2; i + 1 < s.perm.size(); i += 2)
            parts.push_back(ring.bracket(x[at(i)], x[at(i + 1)]));
        LieElement term = ring.left_normed(parts);
        term *= s.sign;
        total += term;
    }
    return total;
}

SerreElement serre_element(int p)
{
    require_prime(p);
    SerreElement out{freelie::punctured_ring(2 * p - 1), {}};
    out.element = serre_element(p, out.ring);
    return out;
}

// ---------------------------------------------------------------- faces

std::optional<SimplicialPair> face(int j, const SimplicialPair& x)
{
    if (j < 0 || j > x.level) throw InputError("face index out of range");
    int a = x.i1;
    int b = x.i2;
    if (j <= x.i1) {
        --a;
        --b;
    } else if (j <= x.i2) {
        --b;
    }
    const int level = x.level - 1;
    if (a < 0 || a == b || b >= level) return std::nullopt;
    return SimplicialPair{a, b, level};
}

void PairTensor::add(Key factors, const Int& c)
{
    if (c == 0 || factors.empty()) return;
    std::sort(factors.begin(), tensor_leg_ ? factors.end() - 1 : factors.end());
    Int& slot = terms_[factors];
    slot += c;
    if (slot == 0) terms_.erase(factors);
}

PairTensor PairTensor::face(int j) const
{
    PairTensor out(tensor_leg_);
    for (const auto& [key, c] : terms_) {
        Key image;
        bool zero = false;
        for (const auto& x : key) {
            auto y = serre::face(j, x);
            if (!y) {
                zero = true;
                break;
            }
            image.push_back(*y);
        }
        if (!zero) out.add(std::move(image), c);
    }
    return out;
}

std::string PairTensor::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Int a = abs(c);
        if (a != 1) os << a << "*";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << (tensor_leg_ && i + 1 == key.size() ? " (x) " : " ");
            os << "(" << key[i].i1 << " " << key[i].i2 << ")";
        }
    }
    return os.str();
}

namespace {

std::vector<SimplicialPair> pairs_of(const std::vector<int>& perm, int level)
{
    std::vector<SimplicialPair> out;
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2) out.push_back({perm[i], perm[i + 1], level});
    return out;
}

}  // namespace

PairTensor beta_tilde(int p, int flip)
{
    require_prime(p);
    PairTensor out;
    int idx = 0;
    for (const auto& s : block_shuffles(p, p)) {
        out.add(pairs_of(s.perm, 2 * p), idx == flip ? -s.sign : s.sign);
        ++idx;
    }
    return out;
}

PairTensor beta(int p)
{
    require_prime(p);
    PairTensor out(false);
    for (const auto& s : block_shuffles(p, p)) out.add(pairs_of(s.perm, 2 * p), s.sign);
    return out;
}

PairTensor displayed_boundary(int p)
{
    require_prime(p);
    PairTensor out;
    const int top = 2 * p - 2;
    for (const auto& s : block_shuffles(p, p - 1)) {
        const auto& r = s.perm;
        if (r[static_cast<std::size_t>(2 * p - 3)] != top) continue;
        if (r[static_cast<std::size_t>(2 * p - 2)] >= top) continue;
        std::vector<SimplicialPair> key;
        for (std::size_t i = 0; i + 3 < r.size(); i += 2) key.push_back({r[i], r[i + 1], 2 * p - 1});
        key.push_back({r[static_cast<std::size_t>(2 * p - 2)], top, 2 * p - 1});
        out.add(std::move(key), s.sign);
    }
    return out;
}

std::vector<PairBracket> long_element(int p)
{
    std::vector<PairBracket> out;
    const int level = 2 * p - 1;
    const int top = 2 * p - 2;
    for (const auto& s : enumerate_shuffles(p)) {
        const auto& r = s.perm;
        const auto n = r.size();
        PairBracket b;
        b.coefficient = s.sign;
        b.entries.push_back({r[n - 1], top, level});
        b.entries.push_back({r[n - 2], top, level});
        for (std::size_t i = 0; i + 3 < n; i += 2) b.entries.push_back({r[i], r[i + 1], level});
        out.push_back(std::move(b));
    }
    return out;
}

PairTensor bra2tens(const std::vector<PairBracket>& xs)
{
    PairTensor out;
    for (const auto& x : xs) {
        const auto& b = x.entries;
        if (b.size() < 2) throw InputError("bra2tens needs at least two entries");
        std::vector<SimplicialPair> first(b.begin() + 1, b.end());
        first.push_back(b[0]);
        out.add(std::move(first), x.coefficient);
        std::vector<SimplicialPair> second;
        second.push_back(b[0]);
        second.insert(second.end(), b.begin() + 2, b.end());
        second.push_back(b[1]);
        out.add(std::move(second), -x.coefficient);
    }
    return out;
}

LieElement bracket_image(const std::vector<PairBracket>& xs, const freelie::PuncturedRing& pr)
{
    const auto& ring = *pr.ring;
    LieElement total;
    for (const auto& x : xs) {
        std::vector<LieElement> parts;
        for (const auto& e : x.entries) {
            if (static_cast<std::size_t>(e.i2) >= ring.rank())
                throw InputError("bracket_image: pair index outside the ring");
            parts.push_back(ring.bracket(ring.generator(e.i1), ring.generator(e.i2)));
        }
        LieElement t = ring.left_normed(parts);
        t *= x.coefficient;
        total += t;
    }
    return total;
}

// ---------------------------------------------------------------- cycle check

CycleReport check_cycle(int p, const PairTensor& bt)
{
    require_prime(p);
    CycleReport r;
    r.p = p;
    std::vector<PairTensor> faces;
    for (int j = 0; j <= 2 * p; ++j) {
        faces.push_back(bt.face(j));
        if (!faces.back().is_zero()) r.nonzero_faces.push_back(j);
    }
    std::ostringstream detail;
    if (r.nonzero_faces.size() != 1) {
        detail << "expected exactly one nonzero face, found " << r.nonzero_faces.size();
        if (!r.nonzero_faces.empty()) {
            detail << " (indices";
            for (int j : r.nonzero_faces) detail << " " << j;
            detail << ")";
        }
        r.detail = detail.str();
        return r;
    }
    r.boundary_face = r.nonzero_faces.front();
    const PairTensor& boundary = faces[static_cast<std::size_t>(r.boundary_face)];
    r.boundary_matches = boundary == displayed_boundary(p);

    const auto lg = long_element(p);
    const PairTensor t = bra2tens(lg);
    PairTensor neg;
    for (const auto& [k, c] : t.terms()) neg.add(k, -c);
    if (boundary == t) r.transgression_sign = 1;
    else if (boundary == neg) r.transgression_sign = -1;

    const auto se = serre_element(p);
    const LieElement img = bracket_image(lg, se.ring);
    if (img == se.element) r.image_sign = 1;
    else if (img == -se.element) r.image_sign = -1;

    r.passed = r.boundary_matches && r.transgression_sign != 0 && r.image_sign != 0;
    if (!r.boundary_matches) detail << "face " << r.boundary_face << " differs from the boundary sum; ";
    if (r.transgression_sign == 0) detail << "boundary is not the image of the long element; ";
    if (r.image_sign == 0) detail << "bracket image differs from alpha_p; ";
    r.detail = detail.str();
    return r;
}

CycleReport verify_cycle(int p)
{
    return check_cycle(p, beta_tilde(p));
}

// ---------------------------------------------------------------- lifts

namespace {

std::vector<std::string> z_names() { return {"z0", "z1", "z2", "z3", "z4"}; }

std::vector<std::vector<std::string>> z_retractions()
{
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i <= 5; ++i) {
        std::vector<std::string> img = z_names();
        if (i == 0) img[0] = "1";
        else if (i == 5) img[4] = "1";
        else img[static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(i - 1)];
        out.push_back(img);
    }
    return out;
}

std::string join_product(const std::vector<std::string>& factors)
{
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " " : "") + factors[i];
    return s;
}

}  // namespace

const std::vector<std::string>& lift3_factors()
{
    static const std::vector<std::string> f = {
        "[[z0,z4],[z2,z4],[z1,z3]^[z0,z4]]^-1", "[[z1,z4],[z2,z4],[z0,z3]^[z1,z4]]",
        "[[z1,z4],[z2,z3],[z0,z4]^[z1,z4]]^-1", "[[z0,z4],[z2,z3],[z1,z4]^[z0,z4]]",
        "[[z2,z4],[z0,z4],[z1,z3]^[z2,z4]]",    "[[z2,z4],[z1,z4],[z0,z3]^[z2,z4]]^-1",
        "[[z2,z3],[z1,z4],[z0,z4]^[z2,z3]]",    "[[z2,z3],[z0,z4],[z1,z4]^[z2,z3]]^-1",
        "[[z3,z4],[z1,z4],[z0,z2]^[z3,z4]]",    "[[z3,z4],[z0,z4],[z1,z2]^[z3,z4]]^-1",
        "[[z3,z4],[z2,z4],[z0,z1]^[z3,z4]]^-1", "[[z1,z4],[z3,z4],[z0,z2]^[z1,z4]]^-1",
        "[[z0,z4],[z3,z4],[z1,z2]^[z0,z4]]",    "[[z2,z4],[z3,z4],[z0,z1]^[z2,z4]]",
    };
    return f;
}

const std::vector<std::string>& lift4_factors()
{
    static const std::vector<std::string> f = {
        "[[[z3,z1],[z3,z2]],[[z4,z0],[z4,z2]]]",
        "[[[z4,z1],[z4,z2]],[[z3,z0],[z3,z2]]]",
        "[[[[z4,z1],[z4,z2]],[[z4,z0],[z4,z2]]],[[z3,z2],[z3,z1]]]",
        "[[[z3,z1],[z3,z2]],[[[z4,z2],[z4,z0]],[[z4,z2],[z4,z1]]]]",
        "[[[z3,z2],[z3,z1]],[[z4,z2],[z4,z0]]]",
        "[[[z4,z2],[z4,z1]],[[z3,z2],[z3,z0]]]",
        "[[[z4,z2],[z3,z0]],[[z4,z2],[z3,z1]]]",
        "[[[z4,z1],[z3,z2]],[[z4,z2],[z3,z0]]]",
        "[[[z4,z2],[z3,z1]],[[z4,z0],[z3,z2]]]",
        "[[[z4,z0],[z3,z2]],[[z4,z1],[z3,z2]]]",
        "[[[z4,z2],[z3,z1]],[[z4,z3],[z2,z0]]]",
        "[[[z4,z3],[z2,z1]],[[z4,z2],[z3,z0]]]",
        "[[[z4,z3],[z2,z0]],[[z4,z1],[z3,z2]]]",
        "[[[z4,z0],[z3,z2]],[[z4,z3],[z2,z1]]]",
        "[[[z4,z3],[z2,z0]],[[z4,z3],[z2,z1]]]",
    };
    return f;
}

GroupLift lift2()
{
    GroupLift l;
    l.name = "lift2";
    l.generators = {"x0", "x1", "x2"};
    l.expression = "[[x0,x2],[x0 x1,x2]]";
    l.retractions = {
        {"1", "x1", "x2"},
        {"x0", "1", "x2"},
        {"x0", "x1", "1"},
        {"x0", "x1", "(x0 x1)^-1"},
    };
    return l;
}

GroupLift lift3()
{
    return {"lift3", z_names(), join_product(lift3_factors()), z_retractions()};
}

GroupLift lift4()
{
    return {"lift4", z_names(), join_product(lift4_factors()), z_retractions()};
}

freeassoc::GroupWord lift_word(const GroupLift& lift)
{
    return cli::parse_group_expression(lift.expression, lift.generators).to_word();
}

std::vector<bool> retraction_checks(const GroupLift& lift)
{
    const auto w = lift_word(lift);
    std::vector<bool> out;
    for (const auto& images : lift.retractions) {
        std::vector<freeassoc::GroupWord> img;
        for (const auto& s : images) img.push_back(cli::parse_group_expression(s, lift.generators).to_word());
        out.push_back(freeassoc::group_retraction(w, img).empty());
    }
    return out;
}

}  // namespace dimsub::serre
