#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twist {

// Exact rational on int64, always normalized (den > 0, gcd(|num|,den) = 1).
// Intermediate products go through __int128 and overflow is an error rather
// than silent wraparound; the quantities in this tool stay far below the
// limit.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static Rat checked(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        const __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rat: value out of range");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    friend Rat operator+(Rat a, Rat b) {
        return checked((__int128)a.num * b.den + (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return checked((__int128)a.num * b.den - (__int128)b.num * a.den,
                       (__int128)a.den * b.den);
    }
    friend Rat operator*(Rat a, Rat b) {
        return checked((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return checked((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(Rat a, Rat b) { return !(b < a); }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return !(a < b); }

    // Smallest integer >= value. An integral value maps to itself, matching
    // the convention that "n >= bound" with integral bound admits n = bound.
    long long ceil() const {
        long long q = num / den, r = num % den;
        return r > 0 ? q + 1 : q;
    }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Parses "p" or "p/q".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }
};

inline Rat rat_min(Rat a, Rat b) { return a < b ? a : b; }
inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

} // namespace twist
