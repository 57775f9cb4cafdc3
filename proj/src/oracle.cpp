#include "twistcert/oracle.hpp"

#include <algorithm>
#include <set>

#include "twistcert/errors.hpp"

namespace twist {

namespace {

Syllable negated(Syllable s) { return Syllable{s.gen, -s.exp}; }

// w is the lexicographically least word among its own rotations and the
// rotations of its inverse. Compared in place, no temporaries.
bool is_canonical_cyclic(const Word& w) {
    const auto& s = w.syls;
    const std::size_t n = s.size();
    if (n == 0) return true;
    auto cmp_rotation = [&](std::size_t r, bool inv) {
        // candidate[i] = s[(r+i) % n], or negated(s[n-1-((r+i) % n)]).
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t idx = (r + i) % n;
            Syllable c = inv ? negated(s[n - 1 - idx]) : s[idx];
            if (c == s[i]) continue;
            return syllable_less(c, s[i]) ? -1 : 1;
        }
        return 0;
    };
    for (std::size_t r = 0; r < n; ++r) {
        if (cmp_rotation(r, true) < 0) return false;
        if (r > 0 && cmp_rotation(r, false) < 0) return false;
    }
    return true;
}

template <typename Visit>
void visit_words(int h, int max_syllables, long long max_step, Visit&& visit) {
    if (h < 1 || max_syllables < 1 || max_step < 1)
        throw invalid_input("word enumeration bounds must be positive");
    std::vector<long long> steps;
    for (long long t = 1; t <= max_step; ++t) steps.push_back(t);
    for (long long t = 1; t <= max_step; ++t) steps.push_back(-t);

    std::vector<Syllable> cur;
    auto rec = [&](auto&& self, int len) -> void {
        if ((int)cur.size() == len) {
            Word w(cur);
            if (is_canonical_cyclic(w)) visit(w);
            return;
        }
        for (int g = 0; g < h; ++g) {
            if (!cur.empty() && cur.back().gen == g) continue;
            if ((int)cur.size() == len - 1 && len > 1 && cur.front().gen == g)
                continue; // cyclically reduced: first and last generators differ
            for (long long e : steps) {
                cur.push_back(Syllable{g, e});
                self(self, len);
                cur.pop_back();
            }
        }
    };
    for (int len = 1; len <= max_syllables; ++len) rec(rec, len);
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

std::vector<Word> enumerate_words(int h, int max_syllables, long long max_step) {
    std::vector<Word> out;
    visit_words(h, max_syllables, max_step, [&out](const Word& w) { out.push_back(w); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> find_relations(const std::vector<Slope>& curves,
                                 const std::vector<long long>& exponents, int max_syllables,
                                 long long max_step, std::size_t limit) {
    std::vector<Word> out;
    visit_words((int)curves.size(), max_syllables, max_step, [&](const Word& w) {
        if (limit && out.size() >= limit) return;
        if (word_matrix(w, curves, exponents) == kIdentity) out.push_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool has_relation(const std::vector<Word>& words, const std::vector<Slope>& curves,
                  const std::vector<long long>& exponents) {
    for (const Word& w : words)
        if (word_matrix(w, curves, exponents) == kIdentity) return true;
    return false;
}

std::vector<ReducibleHit> find_reducibles(const std::vector<Slope>& curves,
                                          const std::vector<long long>& exponents,
                                          int max_syllables, long long max_step) {
    std::set<Word> seen;
    std::vector<ReducibleHit> out;
    visit_words((int)curves.size(), max_syllables, max_step, [&](const Word& w) {
        if (w.size() < 2) return; // powers of one generator are trivially reducible
        Mat2 m = word_matrix(w, curves, exponents);
        if (fixed_slope(m).kind == FixedSlopes::Kind::None) return;
        // Each rotation is a conjugate with its own fixed curve.
        const std::size_t n = w.size();
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Syllable> rot;
            rot.reserve(n);
            for (std::size_t i = 0; i < n; ++i) rot.push_back(w.syls[(r + i) % n]);
            Word cand(std::move(rot));
            if (!seen.insert(cand).second) continue;
            Mat2 cm = word_matrix(cand, curves, exponents);
            out.push_back(ReducibleHit{cand, cm, fixed_slope(cm)});
        }
    });
    std::sort(out.begin(), out.end(),
              [](const ReducibleHit& a, const ReducibleHit& b) { return a.word < b.word; });
    return out;
}

bool has_reducible(const std::vector<Word>& words, const std::vector<Slope>& curves,
                   const std::vector<long long>& exponents) {
    for (const Word& w : words) {
        if (w.size() < 2) continue;
        if (fixed_slope(word_matrix(w, curves, exponents)).kind != FixedSlopes::Kind::None)
            return true;
    }
    return false;
}

NonfreeTriple construct_nonfree_triple(Slope a, Slope b, const Word& g) {
    if (intersect(a, b) < 2)
        throw not_applicable("the non-free construction needs (a,b) >= 2");
    for (const auto& s : g.syls)
        if (s.gen < 0 || s.gen > 1)
            throw invalid_input("the conjugating word uses generators a, b only");

    Slope c1 = apply(word_matrix(g, {a, b}, {1, 1}), a);

    // A curve meeting c1 exactly once, from the extended gcd of c1.
    long long s, t;
    ext_gcd(c1.p, c1.q, s, t);
    Slope c = make_slope(t, -s);
    if (intersect(c, c1) != 1) throw inconsistency("dual curve construction failed");

    // D_{c1} = g D_a g^{-1}; the braid relation between D_c and D_{c1}
    // written over the generators D_a, D_b, D_c (indices 0, 1, 2).
    Word conj = concat(concat(g, make_word({Syllable{0, 1}})), word_inverse(g));
    Word cw = make_word({Syllable{2, 1}});
    WitnessCert rel;
    rel.word = concat(concat(cw, conj), cw);
    rel.equals = concat(concat(conj, cw), conj);
    rel.curves = {a, b, c};
    rel.exponents = {1, 1, 1};
    rel.matrix = word_matrix(rel.word, rel.curves, rel.exponents);
    rel.fixes = fixed_slope(rel.matrix);
    check_witness(rel);

    NonfreeTriple result{CurveSystem::from_slopes({a, b, c}), c1, std::move(rel)};
    return result;
}

} // namespace twist
