#include "twistcert/slope.hpp"

#include <cstdlib>
#include <numeric>

#include "twistcert/errors.hpp"

namespace twist {

Slope make_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw invalid_curve("slope (0,0) is not a curve");
    long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    if (g != 1)
        throw invalid_curve("slope (" + std::to_string(p) + "," + std::to_string(q) +
                            ") is not primitive (gcd " + std::to_string(g) + ")");
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    return Slope{p, q};
}

long long intersect(Slope x, Slope y) {
    long long d = x.p * y.q - x.q * y.p;
    return d < 0 ? -d : d;
}

std::vector<Slope> enumerate_slopes(long long height) {
    if (height < 1) throw invalid_input("slope enumeration needs height >= 1");
    std::vector<Slope> out;
    out.push_back(Slope{1, 0});
    for (long long q = 1; q <= height; ++q)
        for (long long p = -height; p <= height; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back(Slope{p, q});
    return out;
}

} // namespace twist
