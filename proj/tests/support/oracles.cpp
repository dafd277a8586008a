#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace oracle {

namespace {

int mobius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

}  // namespace

Int witt_count(int k, int n)
{
    Int s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n / d));
        s += mobius(d) * pw;
    }
    return s / n;
}

std::size_t lyndon_count(const std::vector<int>& weights, int n)
{
    std::size_t count = 0;
    std::vector<int> w;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            bool lyndon = true;
            for (std::size_t k = 1; k < w.size() && lyndon; ++k) {
                std::vector<int> rot(w.begin() + static_cast<long>(k), w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
                lyndon = w < rot;
            }
            count += lyndon ? 1 : 0;
            return;
        }
        for (int l = 0; l < static_cast<int>(weights.size()); ++l) {
            if (weights[static_cast<std::size_t>(l)] > left) continue;
            w.push_back(l);
            self(self, left - weights[static_cast<std::size_t>(l)]);
            w.pop_back();
        }
    };
    rec(rec, n);
    return count;
}

std::vector<SignedPerm> filtered_shuffles(int m, int chain)
{
    std::vector<int> perm(static_cast<std::size_t>(2 * m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPerm> out;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = perm[2 * i] < perm[2 * i + 1];
        for (int i = 1; i < chain && ok; ++i) ok = perm[2 * i - 1] < perm[2 * i + 1];
        if (!ok) continue;
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
        out.push_back({perm, inv % 2 ? -1 : 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<long>> weighted_compositions(const std::vector<long>& c, long target)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur(c.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i == c.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long k = 0; k * c[i] <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k * c[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, target);
    return out;
}

Int bareiss_determinant(std::vector<std::vector<Int>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int brute_order(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v, long limit)
{
    // Gauss-Jordan over Q on the transposed system sum x_i rows_i = v.
    const std::size_t r = rows.size(), n = v.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(r + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) a[j][i] = mpq_class(rows[i][j]);
        a[j][r] = mpq_class(v[j]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < r && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        const mpq_class inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const mpq_class f = a[i][col];
            for (std::size_t k = 0; k <= r; ++k) a[i][k] -= f * a[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][r] != 0) return 0;
    Int l = 1;
    for (std::size_t i = 0; i < row; ++i) {
        const Int den = a[i][r].get_den();
        l = lcm(l, den);
    }
    return l <= limit ? l : Int(0);
}

std::string random_lie_presentation(std::mt19937& rng, const std::string& name)
{
    auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
    const int ng = pick(2, 4);
    std::vector<std::string> names;
    std::ostringstream s;
    s << "lie " << name << ":\n  ";
    for (int i = 0; i < ng; ++i) {
        const int w = (i >= 2 && pick(0, 2) == 0) ? pick(2, 3) : 1;
        names.push_back("g" + std::to_string(i));
        s << names.back();
        if (w > 1) s << "^(" << w << ")";
        s << (i + 1 < ng ? ", " : ";\n");
    }
    auto term = [&]() -> std::string {
        const auto& a = names[static_cast<std::size_t>(pick(0, ng - 1))];
        const auto& b = names[static_cast<std::size_t>(pick(0, ng - 1))];
        const auto& c = names[static_cast<std::size_t>(pick(0, ng - 1))];
        switch (pick(0, 2)) {
        case 0: return a;
        case 1: return "[" + a + ", " + b + "]";
        default: return "[" + a + ", " + b + ", " + c + "]";
        }
    };
    static const int coefs[] = {1, -1, 2, -2, 3, 4, -4, 8};
    const int nr = pick(1, 3);
    for (int r = 0; r < nr; ++r) {
        s << "  ";
        const int nt = pick(1, 3);
        for (int t = 0; t < nt; ++t) {
            const int k = coefs[pick(0, 7)];
            if (t) s << (k < 0 ? " - " : " + ");
            else if (k < 0) s << "-";
            s << std::abs(k) << " " << term();
        }
        s << " = 0;\n";
    }
    for (int e = 0; e < 3; ++e) s << "  element e" << e << " = " << std::abs(coefs[pick(0, 7)]) << " " << term() << " + " << term() << ";\n";
    return s.str();
}

}  // namespace oracle
