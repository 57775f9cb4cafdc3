#include "twistcert/curve_system.hpp"

#include <string>

#include "twistcert/errors.hpp"

namespace twist {

CurveSystem CurveSystem::from_matrix(std::vector<std::vector<long long>> inter,
                                     bool punctured, bool pairwise_filling) {
    CurveSystem A;
    A.h = (int)inter.size();
    if (A.h < 2) throw invalid_input("curve system needs h >= 2");
    for (int i = 0; i < A.h; ++i) {
        if ((int)inter[i].size() != A.h)
            throw invalid_input("intersection matrix is not square");
        if (inter[i][i] != 0)
            throw invalid_input("intersection matrix must have zero diagonal");
        for (int j = 0; j < A.h; ++j) {
            if (inter[i][j] < 0) throw invalid_input("intersection numbers are nonnegative");
            if (inter[i][j] != inter[j][i])
                throw invalid_input("intersection matrix must be symmetric");
        }
    }
    A.inter = std::move(inter);
    A.punctured = punctured;
    A.pairwise_filling = pairwise_filling;
    return A;
}

CurveSystem CurveSystem::from_slopes(const std::vector<Slope>& slopes, bool punctured) {
    int h = (int)slopes.size();
    if (h < 2) throw invalid_input("curve system needs h >= 2");
    std::vector<std::vector<long long>> inter(h, std::vector<long long>(h, 0));
    bool distinct = true;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            if (i == j) continue;
            inter[i][j] = intersect(slopes[i], slopes[j]);
            if (inter[i][j] == 0) distinct = false;
        }
    // Any two distinct slopes fill the torus.
    CurveSystem A = from_matrix(std::move(inter), punctured, distinct);
    A.torus_slopes = slopes;
    return A;
}

bool CurveSystem::positive_offdiagonal() const {
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (i != j && inter[i][j] == 0) return false;
    return true;
}

long long norm_profile(const std::vector<long long>& profile, const CurveSystem& A) {
    if ((int)profile.size() != A.h)
        throw invalid_input("intersection profile has wrong length");
    long long s = 0;
    for (long long v : profile) {
        if (v < 0) throw invalid_input("intersection profile entries are nonnegative");
        s += v;
    }
    return s;
}

std::vector<long long> profile_of(Slope x, const CurveSystem& A) {
    if (!A.torus_slopes) throw invalid_input("system has no torus realization");
    std::vector<long long> prof(A.h);
    for (int i = 0; i < A.h; ++i) prof[i] = intersect(x, (*A.torus_slopes)[i]);
    return prof;
}

long long norm_slope(Slope x, const CurveSystem& A) {
    long long s = 0;
    for (long long v : profile_of(x, A)) s += v;
    return s;
}

std::pair<long long, long long> twist_bound_interval(long long ab, long long ac,
                                                     long long bc, long long n) {
    long long mid = n * ab * ac;
    return {mid - bc, mid + bc};
}

bool cauchy_schwarz_ok(Slope c1, Slope c2, const CurveSystem& A) {
    if (!A.torus_slopes) throw invalid_input("Cauchy-Schwarz check needs a torus realization");
    bool fills = false;
    for (int i = 0; i < A.h && !fills; ++i)
        for (int j = i + 1; j < A.h && !fills; ++j)
            if ((*A.torus_slopes)[i] != (*A.torus_slopes)[j]) fills = true;
    if (!fills) throw not_applicable("system does not fill the torus");
    long long factor = A.punctured ? 2 : 1;
    __int128 lhs = intersect(c1, c2);
    __int128 rhs = (__int128)factor * norm_slope(c1, A) * norm_slope(c2, A);
    return lhs <= rhs;
}

SystemStats stats(const CurveSystem& A) {
    if (!A.positive_offdiagonal())
        throw not_applicable("stats need all pairwise intersections positive");
    SystemStats s;
    s.min_inter = s.max_inter = A.inter[0][1];
    for (int i = 0; i < A.h; ++i)
        for (int j = 0; j < A.h; ++j) {
            if (i == j) continue;
            s.min_inter = std::min(s.min_inter, A.inter[i][j]);
            s.max_inter = std::max(s.max_inter, A.inter[i][j]);
        }
    for (int i = 0; i < A.h; ++i)
        for (int j = 0; j < A.h; ++j)
            for (int k = 0; k < A.h; ++k) {
                if (i == j || j == k || i == k) continue;
                Rat r(A.inter[i][k], A.inter[i][j] * A.inter[j][k]);
                if (!s.max_ratio || *s.max_ratio < r) s.max_ratio = r;
            }
    return s;
}

} // namespace twist
