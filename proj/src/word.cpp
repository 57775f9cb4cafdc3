#include "twistcert/word.hpp"

#include <algorithm>

#include "twistcert/errors.hpp"

namespace twist {

bool syllable_less(Syllable a, Syllable b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    bool an = a.exp < 0, bn = b.exp < 0;
    if (an != bn) return bn; // positive exponents first
    long long aa = an ? -a.exp : a.exp, bb = bn ? -b.exp : b.exp;
    return aa < bb;
}

bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.syls[i] == b.syls[i]) continue;
        return syllable_less(a.syls[i], b.syls[i]);
    }
    return false;
}

std::string Word::str() const {
    if (syls.empty()) return "1";
    std::string out;
    for (const auto& s : syls) {
        if (!out.empty()) out += ' ';
        out += (char)('a' + s.gen % 26);
        if (s.gen >= 26) out += std::to_string(s.gen + 1);
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

Word make_word(const std::vector<Syllable>& raw) {
    std::vector<Syllable> stack;
    for (const auto& s : raw) {
        if (s.exp == 0) continue;
        if (!stack.empty() && stack.back().gen == s.gen) {
            stack.back().exp += s.exp;
            if (stack.back().exp == 0) stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    return Word(std::move(stack));
}

Word concat(const Word& a, const Word& b) {
    std::vector<Syllable> raw = a.syls;
    raw.insert(raw.end(), b.syls.begin(), b.syls.end());
    return make_word(raw);
}

Word word_inverse(const Word& w) {
    std::vector<Syllable> out(w.syls.rbegin(), w.syls.rend());
    for (auto& s : out) s.exp = -s.exp;
    return Word(std::move(out));
}

Word word_pow(const Word& w, long long e) {
    Word base = e < 0 ? word_inverse(w) : w;
    if (e < 0) e = -e;
    Word r;
    for (long long i = 0; i < e; ++i) r = concat(r, base);
    return r;
}

Word cyclic_reduce(const Word& w) {
    std::vector<Syllable> s = w.syls;
    while (s.size() >= 2 && s.front().gen == s.back().gen) {
        long long e = s.front().exp + s.back().exp;
        int gen = s.front().gen;
        s.erase(s.begin());
        s.pop_back();
        if (e != 0) s.insert(s.begin(), Syllable{gen, e});
    }
    return Word(std::move(s));
}

Word canonical_cyclic(const Word& w) {
    if (w.size() <= 1) {
        Word inv = word_inverse(w);
        return inv < w ? inv : w;
    }
    Word best = w;
    auto consider = [&best](const Word& base) {
        std::size_t n = base.size();
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Syllable> rot;
            rot.reserve(n);
            for (std::size_t i = 0; i < n; ++i) rot.push_back(base.syls[(r + i) % n]);
            Word cand(std::move(rot));
            if (cand < best) best = cand;
        }
    };
    consider(w);
    consider(word_inverse(w));
    return best;
}

Mat2 word_matrix(const Word& w, const std::vector<Slope>& curves,
                 const std::vector<long long>& exponents) {
    if (curves.size() != exponents.size())
        throw invalid_input("word_matrix: curves/exponents length mismatch");
    Mat2 m = kIdentity;
    for (const auto& s : w.syls) {
        if (s.gen < 0 || (std::size_t)s.gen >= curves.size())
            throw invalid_input("word_matrix: generator index out of range");
        m = m * twist_matrix(curves[s.gen], exponents[s.gen] * s.exp);
    }
    return m;
}

} // namespace twist
