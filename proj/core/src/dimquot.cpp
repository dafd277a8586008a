#include "dimsub/dimquot.hpp"

#include "dimsub/errors.hpp"
#include "dimsub/freelie.hpp"
#include "dimsub/parser.hpp"
#include "dimsub/serre.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace dimsub::dimquot {

using freeassoc::AssocElement;
using freeassoc::Word;

namespace {

using SparseRow = std::map<std::size_t, Int>;

void add_scaled(SparseRow& dst, const SparseRow& src, const Int& c)
{
    if (c == 0) return;
    for (const auto& [k, x] : src) {
        auto [it, fresh] = dst.try_emplace(k, 0);
        it->second += c * x;
        if (it->second == 0) dst.erase(it);
    }
}

bool divisible(const Int& a, const Int& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }

// Sparse echelon form over Z; each row remembers its combination of inputs.
class TrackedEchelon {
public:
    void insert(SparseRow v, std::size_t id)
    {
        SparseRow combo{{id, 1}};
        while (!v.empty()) {
            const std::size_t col = v.begin()->first;
            auto it = rows_.find(col);
            if (it == rows_.end()) {
                if (v.begin()->second < 0) {
                    for (auto& [k, x] : v) x = -x;
                    for (auto& [k, x] : combo) x = -x;
                }
                rows_.emplace(col, Row{std::move(v), std::move(combo)});
                return;
            }
            Row& r = it->second;
            const Int& p = r.vec.begin()->second;
            const Int& x = v.begin()->second;
            if (divisible(x, p)) {
                const Int q = -(x / p);
                add_scaled(v, r.vec, q);
                add_scaled(combo, r.combo, q);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
            const Int a = p / g;
            const Int b = x / g;
            Row fresh;
            add_scaled(fresh.vec, r.vec, s);
            add_scaled(fresh.vec, v, t);
            add_scaled(fresh.combo, r.combo, s);
            add_scaled(fresh.combo, combo, t);
            SparseRow rest, rest_combo;
            add_scaled(rest, v, a);
            add_scaled(rest, r.vec, -b);
            add_scaled(rest_combo, combo, a);
            add_scaled(rest_combo, r.combo, -b);
            r = std::move(fresh);
            v = std::move(rest);
            combo = std::move(rest_combo);
        }
    }

    std::optional<SparseRow> solve(SparseRow t) const
    {
        SparseRow out;
        while (!t.empty()) {
            const auto [col, x] = *t.begin();
            auto it = rows_.find(col);
            if (it == rows_.end()) return std::nullopt;
            const Int& p = it->second.vec.begin()->second;
            if (!divisible(x, p)) return std::nullopt;
            const Int q = x / p;
            add_scaled(t, it->second.vec, -q);
            add_scaled(out, it->second.combo, q);
        }
        return out;
    }

private:
    struct Row {
        SparseRow vec;
        SparseRow combo;
    };
    std::map<std::size_t, Row> rows_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const
    {
        std::size_t h = w.size();
        for (int l : w) h = h * 1000003u + static_cast<std::size_t>(l);
        return h;
    }
};

AssocElement relator_expansion(const cli::Presentation& pres, std::size_t r, const freelie::FreeLieRing& ring)
{
    return freeassoc::lie_expand(ring, cli::to_lie_element(pres.lie_relators[r], ring));
}

int word_weight(const Word& w, const cli::Presentation& pres)
{
    int s = 0;
    for (int l : w) s += pres.generators[static_cast<std::size_t>(l)].weight;
    return s;
}

// Words over `alphabet` letters with length at most `max_len`, shortest first.
std::vector<Word> words_up_to(std::size_t alphabet, int max_len)
{
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t l = 0; l < alphabet; ++l) {
                Word w = out[i];
                w.push_back(static_cast<int>(l));
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

struct Multiple {
    std::size_t relator;
    std::size_t left;   // index into the word table
    std::size_t right;
};


AssocElement ideal_term_element(const IdealTerm& t, const cli::Presentation& pres, const AssocElement& rel)
{
    AssocElement e = rel;
    for (std::size_t l : t.generators) e = freeassoc::commutator(e, AssocElement::letter(pres.rank(), static_cast<int>(l)));
    e *= t.coefficient;
    return e;
}

}  // namespace

bool Summand::vanishes() const
{
    return std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.kind == Factor::Kind::Relator; });
}

int Summand::weight() const
{
    int s = 0;
    for (const auto& f : factors)
        if (f.kind == Factor::Kind::Generator) s += f.weight;
    return s;
}

std::size_t DeltaCertificate::vanishing_count() const
{
    return static_cast<std::size_t>(std::count_if(summands.begin(), summands.end(),
                                                  [](const Summand& s) { return s.vanishes(); }));
}

std::size_t DeltaCertificate::product_count() const { return summands.size() - vanishing_count(); }

AssocElement expansion(const cli::LieExpr& e, const cli::Presentation& pres)
{
    const freelie::FreeLieRing ring(pres.weighted_generators());
    return freeassoc::lie_expand(ring, cli::to_lie_element(e, ring));
}

std::optional<DeltaCertificate> delta_certificate_search(const cli::LieExpr& omega, const cli::Presentation& pres,
                                                         int n, const SearchOptions& options)
{
    if (pres.flavor != cli::Flavor::Lie) throw PreconditionError("certificate search needs a Lie presentation");
    const freelie::FreeLieRing ring(pres.weighted_generators());
    const AssocElement target = freeassoc::lie_expand(ring, cli::to_lie_element(omega, ring));
    DeltaCertificate cert{pres, target, {}, n};
    if (target.is_zero()) return cert;

    const int max_len = static_cast<int>(target.max_term_degree()) + options.extra_degree;
    const std::size_t g = pres.rank();
    std::vector<AssocElement> rel;
    std::vector<int> rel_max;
    for (std::size_t r = 0; r < pres.lie_relators.size(); ++r) {
        rel.push_back(relator_expansion(pres, r, ring));
        rel_max.push_back(rel.back().is_zero() ? 0 : static_cast<int>(rel.back().max_term_degree()));
    }
    int min_rel = max_len;
    for (std::size_t r = 0; r < rel.size(); ++r)
        if (!rel[r].is_zero()) min_rel = std::min(min_rel, rel_max[r]);
    const std::vector<Word> words = words_up_to(g, std::max(0, max_len - min_rel));

    std::size_t budget = 0;
    std::vector<Multiple> terms;
    for (std::size_t r = 0; r < rel.size(); ++r) {
        if (rel[r].is_zero()) continue;
        const int room = max_len - rel_max[r];
        for (std::size_t a = 0; a < words.size(); ++a) {
            if (static_cast<int>(words[a].size()) > room) break;
            for (std::size_t b = 0; b < words.size(); ++b) {
                if (static_cast<int>(words[a].size() + words[b].size()) > room) break;
                if (++budget > options.max_terms)
                    throw ResourceLimit("certificate search exceeds the configured number of relator multiples", 0);
                terms.push_back({r, a, b});
            }
        }
    }

    // Only words of weight below n need to cancel.
    std::unordered_map<Word, std::size_t, WordHash> column;
    std::vector<Word> column_word;
    auto col_of = [&](const Word& w) {
        auto [it, fresh] = column.try_emplace(w, column_word.size());
        if (fresh) column_word.push_back(w);
        return it->second;
    };
    auto low_part = [&](const AssocElement& e) {
        SparseRow row;
        for (const auto& [w, c] : e.terms())
            if (word_weight(w, pres) < n) row[col_of(w)] += c;
        return row;
    };
    auto term_element = [&](const Multiple& t) {
        AssocElement e = AssocElement::word(g, words[t.left]);
        e = multiply(multiply(e, rel[t.relator]), AssocElement::word(g, words[t.right]));
        return e;
    };

    // Index multiples by the low words they touch, then grow the relevant set
    // outward from the target.
    std::unordered_map<std::size_t, std::vector<std::size_t>> touching;
    std::vector<SparseRow> term_rows(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        term_rows[i] = low_part(term_element(terms[i]));
        for (const auto& [c, x] : term_rows[i]) touching[c].push_back(i);
    }
    const SparseRow target_low = low_part(target);
    std::vector<bool> col_seen(column_word.size(), false), term_used(terms.size(), false);
    std::deque<std::size_t> queue;
    for (const auto& [c, x] : target_low) {
        col_seen[c] = true;
        queue.push_back(c);
    }
    TrackedEchelon ech;
    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        auto it = touching.find(c);
        if (it == touching.end()) continue;
        for (std::size_t t : it->second) {
            if (term_used[t]) continue;
            term_used[t] = true;
            for (const auto& [c2, x] : term_rows[t])
                if (!col_seen[c2]) {
                    col_seen[c2] = true;
                    queue.push_back(c2);
                }
            ech.insert(term_rows[t], t);
        }
    }

    const auto sol = ech.solve(target_low);
    if (!sol) return std::nullopt;

    AssocElement rest = target;
    for (const auto& [t, q] : *sol) {
        const Multiple& it = terms[t];
        Summand s;
        s.coefficient = q;
        for (int l : words[it.left]) s.factors.push_back({Factor::Kind::Generator, static_cast<std::size_t>(l),
                                                          pres.generators[static_cast<std::size_t>(l)].weight});
        s.factors.push_back({Factor::Kind::Relator, it.relator, 0});
        for (int l : words[it.right]) s.factors.push_back({Factor::Kind::Generator, static_cast<std::size_t>(l),
                                                           pres.generators[static_cast<std::size_t>(l)].weight});
        AssocElement e = term_element(it);
        e *= q;
        rest -= e;
        cert.summands.push_back(std::move(s));
    }
    for (const auto& [w, c] : rest.terms()) {
        if (word_weight(w, pres) < n) throw std::logic_error("dimquot: light word left after elimination");
        Summand s;
        s.coefficient = c;
        for (int l : w) s.factors.push_back({Factor::Kind::Generator, static_cast<std::size_t>(l),
                                             pres.generators[static_cast<std::size_t>(l)].weight});
        cert.summands.push_back(std::move(s));
    }
    return cert;
}

CertificateCheck check_certificate(const DeltaCertificate& cert)
{
    const auto& pres = cert.presentation;
    const freelie::FreeLieRing ring(pres.weighted_generators());
    const std::size_t g = pres.rank();
    std::map<std::size_t, AssocElement> rel;
    auto fail = [](std::string msg) { return CertificateCheck{false, std::move(msg)}; };

    AssocElement acc(g);
    for (std::size_t i = 0; i < cert.summands.size(); ++i) {
        const Summand& s = cert.summands[i];
        const std::string where = "summand " + std::to_string(i) + ": ";
        std::size_t relators = 0;
        AssocElement e = AssocElement::one(g);
        for (const auto& f : s.factors) {
            if (f.kind == Factor::Kind::Relator) {
                if (f.index >= pres.lie_relators.size()) return fail(where + "unknown relator");
                auto it = rel.find(f.index);
                if (it == rel.end()) it = rel.emplace(f.index, relator_expansion(pres, f.index, ring)).first;
                e = multiply(e, it->second);
                ++relators;
                continue;
            }
            if (f.index >= g) return fail(where + "unknown generator");
            if (f.weight != pres.generators[f.index].weight)
                return fail(where + "declared weight differs from the generator weight");
            e = multiply(e, AssocElement::letter(g, static_cast<int>(f.index)));
        }
        if (relators > 1) return fail(where + "more than one relator factor");
        if (relators == 0 && s.weight() < cert.claimed_total_weight)
            return fail(where + "weight " + std::to_string(s.weight()) + " below the claim");
        e *= s.coefficient;
        acc += e;
    }
    if (!(acc == cert.target)) return fail("summands do not add up to the target");
    return {true, {}};
}

bool verify_certificate(const DeltaCertificate& cert) { return check_certificate(cert).ok; }

std::optional<GammaWitness> gamma_witness_search(const cli::LieExpr& omega, const cli::Presentation& pres,
                                                 int n, const SearchOptions& options)
{
    if (pres.flavor != cli::Flavor::Lie) throw PreconditionError("gamma witness search needs a Lie presentation");
    const freelie::FreeLieRing ring(pres.weighted_generators());
    const std::size_t g = pres.rank();
    GammaWitness out{pres, freeassoc::lie_expand(ring, cli::to_lie_element(omega, ring)), {}, AssocElement(g), n};
    if (out.target.is_zero()) return out;
    const int max_len = static_cast<int>(out.target.max_term_degree()) + options.extra_degree;

    std::vector<IdealTerm> terms;
    std::vector<AssocElement> values;
    std::vector<AssocElement> rel;
    for (std::size_t r = 0; r < pres.lie_relators.size(); ++r) {
        rel.push_back(relator_expansion(pres, r, ring));
        if (rel.back().is_zero()) continue;
        std::vector<std::pair<IdealTerm, AssocElement>> layer{{IdealTerm{1, r, {}}, rel.back()}};
        while (!layer.empty()) {
            std::vector<std::pair<IdealTerm, AssocElement>> next;
            for (auto& [t, e] : layer) {
                if (static_cast<int>(e.max_term_degree()) < max_len)
                    for (std::size_t l = 0; l < g; ++l) {
                        IdealTerm u = t;
                        u.generators.push_back(l);
                        next.emplace_back(std::move(u), freeassoc::commutator(e, AssocElement::letter(g, static_cast<int>(l))));
                    }
                if (terms.size() >= options.max_terms)
                    throw ResourceLimit("gamma witness search exceeds the configured number of ideal terms", 0);
                terms.push_back(std::move(t));
                values.push_back(std::move(e));
            }
            layer = std::move(next);
        }
    }

    std::unordered_map<Word, std::size_t, WordHash> column;
    auto low_part = [&](const AssocElement& e) {
        SparseRow row;
        for (const auto& [w, c] : e.terms())
            if (word_weight(w, pres) < n) row[column.try_emplace(w, column.size()).first->second] += c;
        return row;
    };
    TrackedEchelon ech;
    for (std::size_t i = 0; i < terms.size(); ++i) ech.insert(low_part(values[i]), i);
    const auto sol = ech.solve(low_part(out.target));
    if (!sol) return std::nullopt;

    out.residual = out.target;
    for (const auto& [i, q] : *sol) {
        IdealTerm t = terms[i];
        t.coefficient = q;
        out.residual -= ideal_term_element(t, pres, rel[t.relator]);
        out.terms.push_back(std::move(t));
    }
    return out;
}

CertificateCheck check_gamma_witness(const GammaWitness& w)
{
    const auto& pres = w.presentation;
    const freelie::FreeLieRing ring(pres.weighted_generators());
    AssocElement acc = w.residual;
    for (const auto& [word, c] : w.residual.terms())
        if (word_weight(word, pres) < w.n) return {false, "residual word of weight below " + std::to_string(w.n)};
    for (const auto& t : w.terms) {
        if (t.relator >= pres.lie_relators.size()) return {false, "unknown relator"};
        for (std::size_t l : t.generators)
            if (l >= pres.rank()) return {false, "unknown generator"};
        acc += ideal_term_element(t, pres, relator_expansion(pres, t.relator, ring));
    }
    if (!(acc == w.target)) return {false, "terms and residual do not add up to the target"};
    return {true, {}};
}

SubstitutionReport substitution_analysis(int p, const weights::WeightSequence& c)
{
    if (c.c.size() != static_cast<std::size_t>(2 * p)) throw InputError("weight sequence must have 2p entries");
    SubstitutionReport rep;
    rep.p = p;
    rep.c = c;
    rep.n = theorem_class(c);
    // 2p + sum n_i c_i >= n together with sum n_i c_i <= sum c_i forces equality.
    rep.tuples = weights::solutions(c.c, c.total(), 64);
    rep.only_permutations = rep.tuples.size() == 1 &&
                            std::all_of(rep.tuples[0].begin(), rep.tuples[0].end(), [](long v) { return v == 1; });
    return rep;
}

int theorem_class(const weights::WeightSequence& c)
{
    const Int n = Int(static_cast<long>(c.c.size())) + c.total();
    if (!n.fits_sint_p()) throw InputError("weight sequence too large");
    return static_cast<int>(n.get_si());
}

cli::Presentation theorem_presentation(int p, const weights::WeightSequence& c)
{
    if (!serre::is_prime(p)) throw InputError("p must be prime");
    if (c.c.size() != static_cast<std::size_t>(2 * p)) throw InputError("weight sequence must have 2p entries");
    const int m = 2 * p;
    std::ostringstream out;
    out << "lie theorem_p" << p << ":\n  ";
    for (int i = 0; i < m; ++i) out << "x" << i << ", ";
    for (int i = 0; i < m; ++i)
        out << "y" << i << "^(" << (c.c[static_cast<std::size_t>(i)] + 1) << ")" << (i + 1 < m ? ", " : ";\n");
    out << "  ";
    for (int i = 0; i < m; ++i) out << "x" << i << (i + 1 < m ? " + " : " = 0;\n");
    for (int i = 0; i < m; ++i) out << "  " << p << "^" << c.c[static_cast<std::size_t>(i)] << " x" << i << " = y" << i << ";\n";
    const auto alpha = serre::serre_element(p);
    out << "  element omega = " << p << "^" << c.total() << " (" << alpha.ring.ring->to_string(alpha.element) << ");\n";
    return cli::parse_presentation(out.str());
}

}  // namespace dimsub::dimquot
