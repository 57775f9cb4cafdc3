#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twistcert/rational.hpp"
#include "twistcert/slope.hpp"

namespace twist {

// h curves known through their symmetric intersection matrix, optionally
// realized as torus slopes. When a realization is present the matrix is
// required to match it entry for entry. Abstract systems (no realization)
// support theorem-backed verdicts only; bounded verification needs the
// torus action. Realizability of an abstract matrix on some surface is not
// checked; the tool trusts the input.
struct CurveSystem {
    int h = 0;
    std::vector<std::vector<long long>> inter;
    std::optional<std::vector<Slope>> torus_slopes;
    bool punctured = false;
    bool pairwise_filling = false;

    static CurveSystem from_matrix(std::vector<std::vector<long long>> inter,
                                   bool punctured = false, bool pairwise_filling = false);
    static CurveSystem from_slopes(const std::vector<Slope>& slopes, bool punctured = false);

    bool positive_offdiagonal() const;
};

// ||x||_A: the total intersection of x with the system's curves.
long long norm_profile(const std::vector<long long>& profile, const CurveSystem& A);
long long norm_slope(Slope x, const CurveSystem& A);

// Intersection profile ((x,a_1), ..., (x,a_h)) of a realized system.
std::vector<long long> profile_of(Slope x, const CurveSystem& A);

// The interval [n*ab*ac - bc, n*ab*ac + bc] that always contains
// (D_a^{+-n}(b), c).
std::pair<long long, long long> twist_bound_interval(long long ab, long long ac,
                                                     long long bc, long long n);

// (c1,c2) <= ||c1||_A ||c2||_A for a filling system on a closed surface,
// with an extra factor 2 in the punctured case. Requires a torus
// realization with at least two distinct slopes (which always fills).
bool cauchy_schwarz_ok(Slope c1, Slope c2, const CurveSystem& A);

// min/max pairwise intersection, and the largest ratio
// (a_i,a_k) / ((a_i,a_j)(a_j,a_k)) over ordered distinct triples.
// The ratio is absent when h = 2.
struct SystemStats {
    long long min_inter = 0;
    long long max_inter = 0;
    std::optional<Rat> max_ratio;
};

SystemStats stats(const CurveSystem& A); // requires positive off-diagonals

} // namespace twist
