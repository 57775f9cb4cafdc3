#include "twistcert/mat2.hpp"

#include <numeric>
#include <stdexcept>

#include "twistcert/errors.hpp"

namespace twist {

namespace {

long long checked(__int128 v) {
    const __int128 lim = 0x7fffffffffffffffLL;
    if (v > lim || v < -lim) throw std::overflow_error("Mat2: entry out of range");
    return (long long)v;
}

} // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    r.a = checked((__int128)x.a * y.a + (__int128)x.b * y.c);
    r.b = checked((__int128)x.a * y.b + (__int128)x.b * y.d);
    r.c = checked((__int128)x.c * y.a + (__int128)x.d * y.c);
    r.d = checked((__int128)x.c * y.b + (__int128)x.d * y.d);
    return r;
}

Mat2 inverse(const Mat2& m) {
    // det = 1, so the adjugate is the inverse.
    return Mat2{m.d, -m.b, -m.c, m.a};
}

Mat2 mat_pow(Mat2 m, long long e) {
    if (e < 0) { m = inverse(m); e = -e; }
    Mat2 r = kIdentity;
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

Mat2 twist_matrix(Slope c, long long n) {
    Mat2 r;
    r.a = checked(1 + (__int128)n * c.p * c.q);
    r.b = checked(-(__int128)n * c.p * c.p);
    r.c = checked((__int128)n * c.q * c.q);
    r.d = checked(1 - (__int128)n * c.p * c.q);
    return r;
}

Slope apply(const Mat2& m, Slope x) {
    long long p = checked((__int128)m.a * x.p + (__int128)m.b * x.q);
    long long q = checked((__int128)m.c * x.p + (__int128)m.d * x.q);
    // SL(2,Z) preserves primitivity; only the sign needs normalizing.
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    return Slope{p, q};
}

FixedSlopes fixed_slope(const Mat2& m) {
    if (m == kIdentity || m == kMinusIdentity) return {FixedSlopes::Kind::All, {}};
    long long t = m.trace();
    if (t != 2 && t != -2) return {FixedSlopes::Kind::None, {}};
    long long eps = t / 2;
    // Kernel of (m - eps*I).
    long long p, q;
    if (m.b != 0 || m.a != eps) {
        p = m.b;
        q = eps - m.a;
    } else {
        p = eps - m.d;
        q = m.c;
    }
    long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    if (g == 0) throw inconsistency("fixed_slope: degenerate parabolic");
    p /= g;
    q /= g;
    Slope s = make_slope(p, q);
    if (apply(m, s) != s) throw inconsistency("fixed_slope: eigenvector check failed");
    return {FixedSlopes::Kind::One, s};
}

} // namespace twist
