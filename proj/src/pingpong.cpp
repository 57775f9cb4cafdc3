#include "twistcert/pingpong.hpp"

#include <algorithm>
#include <functional>

#include "twistcert/errors.hpp"
#include "twistcert/mat2.hpp"

namespace twist {

namespace {

std::vector<std::vector<std::vector<std::optional<Rat>>>> empty_lambda(int h) {
    return std::vector<std::vector<std::vector<std::optional<Rat>>>>(
        h, std::vector<std::vector<std::optional<Rat>>>(h, std::vector<std::optional<Rat>>(h)));
}

} // namespace

PingPongParams PingPongParams::uniform(int h) {
    std::vector<std::vector<Rat>> mu(h, std::vector<Rat>(h, Rat(1)));
    return from_mu(std::move(mu));
}

PingPongParams PingPongParams::from_mu(std::vector<std::vector<Rat>> mu) {
    PingPongParams P;
    P.h = (int)mu.size();
    if (P.h < 2) throw invalid_input("ping-pong parameters need h >= 2");
    for (int i = 0; i < P.h; ++i) {
        if ((int)mu[i].size() != P.h) throw invalid_input("mu matrix is not square");
        for (int j = 0; j < P.h; ++j) {
            if (i == j) continue;
            if (!(Rat(0) < mu[i][j])) throw invalid_input("mu entries must be positive");
            if (mu[i][j] * mu[j][i] != Rat(1))
                throw invalid_input("mu must satisfy mu[j][i] = 1/mu[i][j]");
        }
    }
    P.mu = std::move(mu);
    P.lambda = empty_lambda(P.h);
    return P;
}

PingPongParams PingPongParams::from_mu_upper(int h, const std::vector<Rat>& upper) {
    if ((int)upper.size() != h * (h - 1) / 2)
        throw invalid_input("expected " + std::to_string(h * (h - 1) / 2) +
                            " upper-triangle mu entries");
    std::vector<std::vector<Rat>> mu(h, std::vector<Rat>(h, Rat(1)));
    int idx = 0;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            if (!(Rat(0) < upper[idx])) throw invalid_input("mu entries must be positive");
            mu[i][j] = upper[idx];
            mu[j][i] = Rat(1) / upper[idx];
            ++idx;
        }
    return from_mu(std::move(mu));
}

PingPongParams PingPongParams::with_lambda_const(Rat lam) const {
    if (!(Rat(1) < lam)) throw invalid_input("lambda entries must exceed 1");
    PingPongParams P = *this;
    P.ratio_implied = false;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            for (int k = 0; k < h; ++k)
                if (i != j && j != k && i != k) P.lambda[i][j][k] = lam;
    return P;
}

PingPongParams PingPongParams::from_filling(const CurveSystem& A,
                                            std::vector<std::vector<Rat>> mu) {
    if (!A.pairwise_filling)
        throw not_applicable("lambda from filling requires pairwise_filling");
    if (!A.positive_offdiagonal())
        throw not_applicable("lambda from filling requires positive intersections");
    PingPongParams P = from_mu(std::move(mu));
    if (P.h != A.h) throw invalid_input("mu size does not match the system");
    for (int i = 0; i < P.h; ++i)
        for (int j = 0; j < P.h; ++j)
            for (int k = 0; k < P.h; ++k) {
                if (i == j || j == k || i == k) continue;
                Rat ratio = Rat(A.inter[k][j], A.inter[i][k]);
                P.lambda[i][j][k] =
                    Rat(2 * A.inter[i][j]) * (Rat(1) + ratio) * (P.mu[i][j] + Rat(1));
            }
    P.ratio_implied = true;
    return P;
}

PingPongParams PingPongParams::triangle(const CurveSystem& A,
                                        std::vector<std::vector<Rat>> mu) {
    if (A.h != 3) throw not_applicable("triangle reduction is for three curves");
    if (!A.torus_slopes)
        throw not_applicable("triangle reduction needs a torus realization");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && A.inter[i][j] != 1)
                throw not_applicable("triangle reduction needs pairwise intersection one");
    PingPongParams P = from_mu(std::move(mu));
    // The cut-into-triangles identity forces (x,a_i) = (x,a_j) + (x,a_k) for
    // some labelling, which makes the ratio conditions automatic provided
    // mu_ji + mu_ki >= 1.
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (P.mu[j][i] + P.mu[k][i] < Rat(1))
            throw not_applicable("triangle reduction needs mu_ji + mu_ki >= 1");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (i != j && j != k && i != k) P.lambda[i][j][k] = Rat(1) + P.mu[i][j];
    P.ratio_implied = true;
    return P;
}

bool in_region(const std::vector<long long>& profile, int i, const CurveSystem& A,
               const PingPongParams& P) {
    if (i < 0 || i >= A.h) throw invalid_input("region index out of range");
    long long norm = norm_profile(profile, A);
    if (norm == 0) throw outside_domain("curve has zero norm against the system");
    for (int j = 0; j < A.h; ++j) {
        if (j == i) continue;
        // (x,a_i) < mu_ij (x,a_j), compared exactly.
        if (!(Rat(profile[i]) < P.mu[i][j] * Rat(profile[j]))) return false;
    }
    if (!P.ratio_implied) {
        for (int j = 0; j < A.h; ++j)
            for (int k = 0; k < A.h; ++k) {
                if (j == i || k == i || j == k) continue;
                auto lam = P.lambda[i][j][k];
                if (!lam) continue;
                // (x,a_k)(a_i,a_j) < lambda (a_i,a_k)(x,a_j)
                if (!(Rat(profile[k]) * Rat(A.inter[i][j]) <
                      *lam * Rat(A.inter[i][k]) * Rat(profile[j])))
                    return false;
            }
    }
    return true;
}

std::vector<int> regions_of(const std::vector<long long>& profile, const CurveSystem& A,
                            const PingPongParams& P) {
    std::vector<int> out;
    for (int i = 0; i < A.h; ++i)
        if (in_region(profile, i, A, P)) out.push_back(i);
    return out;
}

bool in_region(Slope x, int i, const CurveSystem& A, const PingPongParams& P) {
    return in_region(profile_of(x, A), i, A, P);
}

int region_of(Slope x, const CurveSystem& A, const PingPongParams& P) {
    auto prof = profile_of(x, A);
    for (int i = 0; i < A.h; ++i)
        if (in_region(prof, i, A, P)) return i;
    return -1;
}

std::vector<Slope> exceptional_curves(const CurveSystem& A, const PingPongParams& P,
                                      long long height) {
    if (!A.torus_slopes) throw invalid_input("exceptional curves need a torus realization");
    std::vector<Slope> out;
    for (Slope x : enumerate_slopes(height)) {
        if (norm_slope(x, A) == 0) continue;
        if (region_of(x, A, P) == -1) out.push_back(x);
    }
    return out;
}

namespace {

// Reduced generator sequences of the given length (adjacent entries
// distinct), visited in lexicographic order.
void gen_sequences(int h, int len, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& visit) {
    if ((int)cur.size() == len) {
        visit(cur);
        return;
    }
    for (int g = 0; g < h; ++g) {
        if (!cur.empty() && cur.back() == g) continue;
        cur.push_back(g);
        gen_sequences(h, len, cur, visit);
        cur.pop_back();
    }
}

} // namespace

VerificationReport verify_ping_pong(const CurveSystem& A,
                                    const std::vector<long long>& exponents,
                                    const PingPongParams& P, PingPongMode mode,
                                    const VerifyOptions& opt) {
    if (!A.torus_slopes) throw invalid_input("verification needs a torus realization");
    if ((int)exponents.size() != A.h) throw invalid_input("one exponent per curve required");
    for (long long n : exponents)
        if (n < 1) throw invalid_input("exponents must be positive");
    if (opt.height < 1 || opt.power_bound < 1 || opt.n0 < 1)
        throw invalid_input("verification bounds must be positive");

    const auto& curves = *A.torus_slopes;
    VerificationReport rep;
    rep.mode = mode;
    rep.height = opt.height;
    rep.power_bound = opt.power_bound;
    rep.n0 = opt.n0;

    bool check_norm = opt.norm_growth.value_or(mode != PingPongMode::Strict);

    std::vector<Slope> slopes = enumerate_slopes(opt.height);
    std::vector<int> region(slopes.size(), -1);
    for (std::size_t s = 0; s < slopes.size(); ++s) {
        if (norm_slope(slopes[s], A) == 0) continue; // not in X
        region[s] = region_of(slopes[s], A, P);
        ++rep.checked_slopes;
        if (region[s] == -1) rep.uncovered.push_back(slopes[s]);
    }

    // Signed generator steps in a fixed order.
    std::vector<long long> steps;
    for (long long t = 1; t <= opt.power_bound; ++t) steps.push_back(t);
    for (long long t = 1; t <= opt.power_bound; ++t) steps.push_back(-t);

    for (std::size_t s = 0; s < slopes.size(); ++s) {
        int j = region[s];
        if (j == -1) continue;
        long long norm_x = check_norm ? norm_slope(slopes[s], A) : 0;
        for (int i = 0; i < A.h; ++i) {
            if (i == j) continue;
            for (long long t : steps) {
                Slope image = apply(twist_matrix(curves[i], exponents[i] * t), slopes[s]);
                ++rep.checked_moves;
                if (!in_region(image, i, A, P))
                    rep.move_violations.push_back({slopes[s], j, i, t, image, false});
                if (check_norm && !(norm_slope(image, A) > norm_x))
                    rep.move_violations.push_back({slopes[s], j, i, t, image, true});
            }
        }
    }

    if (mode == PingPongMode::Weak) {
        // Exceptional curves must be absorbed by every reduced word of
        // exactly n0 syllables: some suffix image has to land in that
        // suffix's leading region, from where the verified moves carry it
        // onwards. Words of up to n0 syllables must not fix them either.
        for (Slope x : rep.uncovered) {
            for (int len = 1; len <= rep.n0; ++len) {
                std::vector<int> cur;
                gen_sequences(A.h, len, cur, [&](const std::vector<int>& gens) {
                    std::vector<std::size_t> pick(len, 0);
                    while (true) {
                        ++rep.checked_words;
                        std::vector<Syllable> syls(len);
                        for (int t = 0; t < len; ++t)
                            syls[t] = Syllable{gens[t], steps[pick[t]]};
                        Word w(syls);
                        // Suffix images, rightmost syllable applied first.
                        Slope img = x;
                        bool absorbed = false;
                        for (int t = len - 1; t >= 0; --t) {
                            img = apply(
                                twist_matrix(curves[gens[t]], exponents[gens[t]] * syls[t].exp),
                                img);
                            if (!absorbed && norm_slope(img, A) > 0 &&
                                in_region(img, gens[t], A, P))
                                absorbed = true;
                        }
                        if (img == x) rep.word_violations.push_back({x, w, true});
                        if (len == rep.n0 && !absorbed)
                            rep.word_violations.push_back({x, w, false});
                        // next exponent assignment
                        int t = len - 1;
                        while (t >= 0 && ++pick[t] == steps.size()) pick[t--] = 0;
                        if (t < 0) break;
                    }
                });
            }
        }
    }

    rep.pass = rep.move_violations.empty() && rep.word_violations.empty();
    if (mode == PingPongMode::NormGrowth) rep.pass = rep.pass && rep.uncovered.empty();
    return rep;
}

} // namespace twist
