#pragma once

#include <array>
#include <string>

#include "twistcert/slope.hpp"

namespace twist {

// 2x2 integer matrix of determinant 1; the image of a twist word in
// MCG(T^2) = SL(2,Z). Row-major entries.
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
               std::to_string(c) + "," + std::to_string(d) + "]]";
    }
};

inline const Mat2 kIdentity{1, 0, 0, 1};
inline const Mat2 kMinusIdentity{-1, 0, 0, -1};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 inverse(const Mat2& m);
Mat2 mat_pow(Mat2 m, long long e); // e may be negative

// The n-th power of the right-handed Dehn twist about c, as a matrix:
// I + n * [[pq, -p^2], [q^2, -pq]]. This is the unipotent family fixing c
// projectively, with the sign convention fixed so that the three standard
// slopes (1,0), (0,1), (1,1) give
//   [[1,-1],[0,1]], [[1,0],[1,1]], [[2,-1],[1,0]]
// at n = 1.
Mat2 twist_matrix(Slope c, long long n);

// Projective action on slopes; the result is canonical.
Slope apply(const Mat2& m, Slope x);

// Rational fixed-slope classification: +-I fixes every slope, a non-central
// matrix with |trace| = 2 fixes exactly one, and |trace| != 2 fixes none
// (Anosov for |trace| > 2, elliptic for |trace| < 2).
struct FixedSlopes {
    enum class Kind { None, One, All };
    Kind kind = Kind::None;
    Slope slope{};

    friend bool operator==(const FixedSlopes& x, const FixedSlopes& y) {
        if (x.kind != y.kind) return false;
        return x.kind != Kind::One || x.slope == y.slope;
    }
};

FixedSlopes fixed_slope(const Mat2& m);

} // namespace twist
