#pragma once

#include <cstddef>
#include <vector>

#include "twistcert/certificates.hpp"
#include "twistcert/curve_system.hpp"
#include "twistcert/word.hpp"

namespace twist {

// Brute-force ground truth on the torus: enumerate cyclically reduced words
// in the generator powers and look for relations (words mapping to I) and
// reducible elements (+-I or parabolic matrices). Exhaustive within its
// bounds, so results only ever grow when the bounds do.

// All cyclically reduced words with at most max_syllables syllables and
// syllable exponents in [-max_step, max_step] \ {0}, one representative per
// class under cyclic rotation and inversion (the lexicographically least),
// in deterministic order.
std::vector<Word> enumerate_words(int h, int max_syllables, long long max_step);

// Nontrivial words evaluating exactly to I. -I is not a relation: it is a
// nontrivial mapping class (which fixes every slope, so it shows up in the
// reducible search instead). An optional hit limit stops the search early.
std::vector<Word> find_relations(const std::vector<Slope>& curves,
                                 const std::vector<long long>& exponents, int max_syllables,
                                 long long max_step, std::size_t limit = 0);

// Convenience wrapper over a pre-enumerated word list, for sweeps that
// reuse the same bounds across many exponent choices.
bool has_relation(const std::vector<Word>& words, const std::vector<Slope>& curves,
                  const std::vector<long long>& exponents);

struct ReducibleHit {
    Word word;
    Mat2 matrix;
    FixedSlopes fixes;
};

// Words in at least two generators whose matrix fixes a slope. Every cyclic
// rotation of a hit is reported as its own entry: rotations are conjugate
// elements fixing different curves, and the specific fixed slopes matter.
// Entries are sorted by word.
std::vector<ReducibleHit> find_reducibles(const std::vector<Slope>& curves,
                                          const std::vector<long long>& exponents,
                                          int max_syllables, long long max_step);

bool has_reducible(const std::vector<Word>& words, const std::vector<Slope>& curves,
                   const std::vector<long long>& exponents);

// The spread-out non-free triples: c1 = g(a) for a word g in D_a, D_b, a
// third curve c meeting c1 once, and the relation coming from the braid
// relation between D_c and D_{c1} = g D_a g^{-1}. Requires (a,b) >= 2.
struct NonfreeTriple {
    CurveSystem system; // curves (a, b, c)
    Slope c1;
    WitnessCert relation;
};

NonfreeTriple construct_nonfree_triple(Slope a, Slope b, const Word& g);

} // namespace twist
