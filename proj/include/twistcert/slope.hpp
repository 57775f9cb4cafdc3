#pragma once

#include <string>
#include <vector>

namespace twist {

// An essential unoriented simple closed curve on the torus, encoded as a
// primitive integer pair up to sign. Canonical form: q > 0, or q = 0 and
// p = 1. All set logic in the tool works projectively through this form.
struct Slope {
    long long p = 1;
    long long q = 0;

    friend bool operator==(Slope a, Slope b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(Slope a, Slope b) { return !(a == b); }
    friend bool operator<(Slope a, Slope b) {
        if (a.q != b.q) return a.q < b.q;
        return a.p < b.p;
    }

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

// Canonical representative of the projective class of (p,q).
// Rejects (0,0) and non-primitive pairs; it never divides out a gcd.
Slope make_slope(long long p, long long q);

// Geometric intersection number |p_x q_y - q_x p_y|.
// Symmetric, and zero exactly when the slopes coincide.
long long intersect(Slope x, Slope y);

// All canonical slopes with max(|p|,|q|) <= height, ordered by (q, p).
// Deterministic desk-scale truncation of the set of all curves.
std::vector<Slope> enumerate_slopes(long long height);

} // namespace twist
