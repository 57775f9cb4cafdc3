#pragma once

#include <string>
#include <vector>

#include "twistcert/mat2.hpp"
#include "twistcert/slope.hpp"

namespace twist {

// One block g^e of a word in the abstract generators g_1..g_h.
// gen is 0-based internally; reports and files use 1-based indices.
struct Syllable {
    int gen = 0;
    long long exp = 0;

    friend bool operator==(Syllable a, Syllable b) { return a.gen == b.gen && a.exp == b.exp; }
};

// Ordered syllable key: generators ascending, then positive exponents before
// negative ones (+1 < +2 < ... < -1 < -2 < ...). Used for canonical forms.
bool syllable_less(Syllable a, Syllable b);

// A reduced word: adjacent syllables use distinct generators, exponents are
// nonzero. The empty word is the identity.
struct Word {
    std::vector<Syllable> syls;

    Word() = default;
    explicit Word(std::vector<Syllable> s) : syls(std::move(s)) {}

    bool empty() const { return syls.empty(); }
    std::size_t size() const { return syls.size(); }

    friend bool operator==(const Word& a, const Word& b) { return a.syls == b.syls; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b);

    std::string str() const; // e.g. "a b^-2 c^3"
};

// Builds a reduced word from an arbitrary syllable sequence, merging and
// cancelling as needed.
Word make_word(const std::vector<Syllable>& raw);

Word concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);
Word word_pow(const Word& w, long long e);

// Merges first and last syllables while they share a generator; the result
// is the cyclically reduced representative of the conjugacy class.
Word cyclic_reduce(const Word& w);

// Lexicographically least among all rotations of w and of its inverse.
// Canonical representative used to deduplicate cyclic words.
Word canonical_cyclic(const Word& w);

// Evaluates the word in the group generated by the twist powers
// D_{curves[i]}^{exponents[i]}: syllable (i, e) contributes
// twist_matrix(curves[i], exponents[i] * e), multiplied left to right so the
// product acts like function composition.
Mat2 word_matrix(const Word& w, const std::vector<Slope>& curves,
                 const std::vector<long long>& exponents);

} // namespace twist
