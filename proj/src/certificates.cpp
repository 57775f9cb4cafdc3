#include "twistcert/certificates.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "twistcert/errors.hpp"

namespace twist {

namespace {

const std::vector<Slope> kStdPair = {Slope{1, 0}, Slope{0, 1}};

Word syllables(std::initializer_list<Syllable> s) { return make_word(std::vector<Syllable>(s)); }

// (g_u g_v)^e
Word alt_pow(int u, int v, long long e) {
    return word_pow(syllables({{u, 1}, {v, 1}}), e);
}

std::string status_note(long long m) {
    return m >= 2 ? "m >= 2" : "exponent multiset avoids the finite exceptions";
}

} // namespace

void check_witness(const WitnessCert& w) {
    if (w.word.empty()) throw inconsistency("witness word is trivial");
    Mat2 m = word_matrix(w.word, w.curves, w.exponents);
    if (m != w.matrix) throw inconsistency("witness matrix mismatch");
    if (w.equals) {
        Mat2 m2 = word_matrix(*w.equals, w.curves, w.exponents);
        if (m2 != m) throw inconsistency("relation witness sides differ");
        if (concat(w.word, word_inverse(*w.equals)).empty())
            throw inconsistency("relation witness is freely trivial");
    } else {
        FixedSlopes fs = fixed_slope(m);
        if (fs.kind == FixedSlopes::Kind::None)
            throw inconsistency("reducibility witness fixes nothing");
        if (!(fs == w.fixes)) throw inconsistency("witness fixed slope mismatch");
    }
}

std::pair<long long, long long> pair_min_exponents(long long m, Rat lam) {
    if (m < 1) throw not_applicable("pair exponent bounds need m >= 1");
    if (!(Rat(0) < lam)) throw invalid_input("lambda must be positive");
    Rat na = Rat(2) / (lam * Rat(m));
    Rat nb = Rat(2) * lam / Rat(m);
    return {std::max(1LL, na.ceil()), std::max(1LL, nb.ceil())};
}

WitnessCert nonfree_relation_2(int k) {
    if (k < 1 || k > 3) throw invalid_input("relation pattern exists for k = 1, 2, 3");
    WitnessCert w;
    w.curves = kStdPair;
    w.exponents = {1, k};
    if (k == 1) {
        w.word = syllables({{0, 1}, {1, 1}, {0, 1}});
        w.equals = syllables({{1, 1}, {0, 1}, {1, 1}});
    } else {
        // (g0 g1)^e g0 = g0 (g0 g1)^e with e = 4 for k = 2, e = 3 for k = 3,
        // the relations in <D_a, D_b^k> coming from the braid relation.
        long long e = k == 2 ? 4 : 3;
        w.word = concat(alt_pow(0, 1, e), syllables({{0, 1}}));
        w.equals = concat(syllables({{0, 1}}), alt_pow(0, 1, e));
    }
    w.matrix = word_matrix(w.word, w.curves, w.exponents);
    w.fixes = fixed_slope(w.matrix);
    check_witness(w);
    return w;
}

namespace {

// The m = 1 relation pair with roles filled in: u is the generator carrying
// exponent 1.
WitnessCert nonfree_relation_roles(long long n1, long long n2) {
    int u = n1 <= n2 ? 0 : 1;
    int v = 1 - u;
    long long k = std::max(n1, n2);
    WitnessCert w;
    w.curves = kStdPair;
    w.exponents = {n1, n2};
    if (k == 1) {
        w.word = syllables({{u, 1}, {v, 1}, {u, 1}});
        w.equals = syllables({{v, 1}, {u, 1}, {v, 1}});
    } else {
        long long e = k == 2 ? 4 : 3;
        w.word = concat(alt_pow(u, v, e), syllables({{u, 1}}));
        w.equals = concat(syllables({{u, 1}}), alt_pow(u, v, e));
    }
    w.matrix = word_matrix(w.word, w.curves, w.exponents);
    w.fixes = fixed_slope(w.matrix);
    check_witness(w);
    return w;
}

bool bad_free_multiset(long long n1, long long n2) {
    long long lo = std::min(n1, n2), hi = std::max(n1, n2);
    return lo == 1 && hi <= 3;
}

} // namespace

Verdict classify_free_2(long long m, long long n1, long long n2) {
    if (m < 0) throw invalid_input("intersection number is nonnegative");
    if (n1 < 1 || n2 < 1) throw invalid_input("exponents must be positive");
    Verdict v;
    v.question = Question::Freeness;
    if (m == 0) {
        // Disjoint curves: the twist powers commute.
        v.status = Status::No;
        v.kind = CertKind::Witness;
        WitnessCert w;
        w.curves = {Slope{1, 0}, Slope{1, 0}};
        w.exponents = {n1, n2};
        w.word = syllables({{0, 1}, {1, 1}});
        w.equals = syllables({{1, 1}, {0, 1}});
        w.matrix = word_matrix(w.word, w.curves, w.exponents);
        w.fixes = fixed_slope(w.matrix);
        check_witness(w);
        v.witness = std::move(w);
        return v;
    }
    if (m == 1 && bad_free_multiset(n1, n2)) {
        v.status = Status::No;
        v.kind = CertKind::Witness;
        v.witness = nonfree_relation_roles(n1, n2);
        return v;
    }
    v.status = Status::Yes;
    v.kind = CertKind::Theorem;
    v.theorem = TheoremCert{"two-twist-free-table",
                            {{"m", std::to_string(m)},
                             {"n1", std::to_string(n1)},
                             {"n2", std::to_string(n2)},
                             {"reason", status_note(m)}}};
    return v;
}

Verdict classify_relpa_2(long long m, long long n1, long long n2) {
    if (m < 1) throw not_applicable("disjoint curves are outside the two-twist table");
    if (n1 < 1 || n2 < 1) throw invalid_input("exponents must be positive");
    Verdict v;
    v.question = Question::RelativePA;
    long long lo = std::min(n1, n2), hi = std::max(n1, n2);

    auto no_with = [&v](WitnessCert w) {
        v.status = Status::No;
        v.kind = CertKind::Witness;
        v.witness = std::move(w);
    };

    if (m == 2 && n1 == 1 && n2 == 1) {
        // D_b D_a fixes (1,1) for the pair (1,0), (1,2).
        WitnessCert w;
        w.curves = {Slope{1, 0}, Slope{1, 2}};
        w.exponents = {1, 1};
        w.word = syllables({{1, 1}, {0, 1}});
        w.matrix = word_matrix(w.word, w.curves, w.exponents);
        w.fixes = fixed_slope(w.matrix);
        check_witness(w);
        no_with(std::move(w));
        return v;
    }
    if (m == 1 && lo == 2 && hi == 2) {
        // D_b^2 D_a^2 is parabolic.
        WitnessCert w;
        w.curves = kStdPair;
        w.exponents = {2, 2};
        w.word = syllables({{1, 1}, {0, 1}});
        w.matrix = word_matrix(w.word, w.curves, w.exponents);
        w.fixes = fixed_slope(w.matrix);
        check_witness(w);
        no_with(std::move(w));
        return v;
    }
    if (m == 1 && lo == 1 && hi <= 3) {
        // (D_a D_b^k)^e commutes with D_a; on the torus the word evaluates
        // to I, a relation.
        int u = n1 <= n2 ? 0 : 1;
        int v2 = 1 - u;
        long long e = hi == 1 ? 6 : (hi == 2 ? 4 : 3);
        WitnessCert w;
        w.curves = kStdPair;
        w.exponents = {n1, n2};
        w.word = alt_pow(u, v2, e);
        w.matrix = word_matrix(w.word, w.curves, w.exponents);
        w.fixes = fixed_slope(w.matrix);
        check_witness(w);
        no_with(std::move(w));
        return v;
    }
    v.status = Status::Yes;
    v.kind = CertKind::Theorem;
    v.theorem = TheoremCert{"two-twist-relpa-table",
                            {{"m", std::to_string(m)},
                             {"n1", std::to_string(n1)},
                             {"n2", std::to_string(n2)},
                             {"reason", m >= 3 ? "m >= 3" : status_note(m)}}};
    return v;
}

namespace {

std::optional<Rat> source_lambda(const PingPongParams& P, int j, int i, int k) {
    return P.lambda[j][i][k];
}

Rat require_lambda(const PingPongParams& P, int j, int i, int k) {
    auto l = source_lambda(P, j, i, k);
    if (!l)
        throw not_applicable("exponent bound needs a finite lambda_{" + std::to_string(j + 1) +
                             std::to_string(i + 1) + std::to_string(k + 1) + "}");
    return *l;
}

} // namespace

Rat region_move_bound_pair(int i, int j, const CurveSystem& A, const PingPongParams& P) {
    if (i == j || i < 0 || j < 0 || i >= A.h || j >= A.h)
        throw invalid_input("bound needs two distinct curve indices");
    if (P.h != A.h) throw invalid_input("parameter size does not match the system");
    if (!A.positive_offdiagonal())
        throw not_applicable("exponent bounds need positive intersections");

    auto I = [&A](int x, int y) { return Rat(A.inter[x][y]); };

    // (x,a_j) side of the target mu conditions.
    Rat best = Rat(2) / (P.mu[i][j] * I(i, j));

    // Remaining mu conditions; the source region bounds (x,a_k)/(x,a_i).
    for (int k = 0; k < A.h; ++k) {
        if (k == i || k == j) continue;
        Rat t = Rat(1) / (P.mu[i][k] * I(i, k)) +
                require_lambda(P, j, i, k) * I(j, k) / (I(i, j) * I(i, k));
        best = rat_max(best, t);
    }

    if (!P.ratio_implied) {
        // Target ratio conditions (x',a_l)/(x',a_k) < lambda_ikl * ...,
        // for every ordered pair k != l away from i; entries set to
        // infinity carry no condition.
        for (int k = 0; k < A.h; ++k)
            for (int l = 0; l < A.h; ++l) {
                if (k == i || l == i || k == l) continue;
                auto target = P.lambda[i][k][l];
                if (!target) continue;
                if (!(Rat(1) < *target))
                    throw not_applicable("ratio bounds need lambda > 1");
                Rat den = *target - Rat(1);
                Rat t;
                if (k != j && l != j) {
                    t = require_lambda(P, j, i, l) / den * I(j, l) / (I(i, l) * I(j, i)) +
                        *target * require_lambda(P, j, i, k) / den * I(j, k) /
                            (I(j, i) * I(i, k));
                } else if (l == j) {
                    t = Rat(1) / (den * P.mu[i][j] * I(i, j)) +
                        *target * require_lambda(P, j, i, k) / den * I(j, k) /
                            (I(j, i) * I(i, k));
                } else { // k == j
                    t = *target / (den * P.mu[i][j] * I(i, j)) +
                        require_lambda(P, j, i, l) / den * I(j, l) / (I(j, i) * I(i, l));
                }
                best = rat_max(best, t);
            }
    }
    return best;
}

ExponentBound region_move_bound(int i, const CurveSystem& A, const PingPongParams& P) {
    std::optional<Rat> best;
    for (int j = 0; j < A.h; ++j) {
        if (j == i) continue;
        Rat t = region_move_bound_pair(i, j, A, P);
        if (!best || *best < t) best = t;
    }
    if (!best) throw invalid_input("bound needs at least two curves");
    return ExponentBound{*best, std::max(1LL, best->ceil())};
}

Rat norm_growth_bound(int i, int j, const CurveSystem& A, const PingPongParams& P) {
    if (i == j || i < 0 || j < 0 || i >= A.h || j >= A.h)
        throw invalid_input("bound needs two distinct curve indices");
    if (!A.positive_offdiagonal())
        throw not_applicable("exponent bounds need positive intersections");
    Rat norm_ai(0);
    for (int k = 0; k < A.h; ++k) norm_ai = norm_ai + Rat(A.inter[i][k]);
    Rat sum = P.mu[j][i];
    for (int k = 0; k < A.h; ++k) {
        if (k == i || k == j) continue;
        sum = sum + require_lambda(P, j, i, k) * Rat(A.inter[j][k]) / Rat(A.inter[j][i]);
    }
    return Rat(2) / norm_ai * sum;
}

Verdict unit_exponent_free_check(const CurveSystem& A) {
    if (A.h < 3) throw not_applicable("the ratio criterion is for h >= 3");
    SystemStats s = stats(A);
    Verdict v;
    v.question = Question::Freeness;
    v.kind = CertKind::Theorem;
    bool simple = Rat(s.max_inter) <= Rat(s.min_inter * s.min_inter, 6);
    bool ok = *s.max_ratio <= Rat(1, 6);
    v.status = ok ? Status::Yes : Status::Unknown;
    v.theorem = TheoremCert{"sixth-ratio-freeness",
                            {{"m", std::to_string(s.min_inter)},
                             {"M", std::to_string(s.max_inter)},
                             {"max_ratio", s.max_ratio->str()},
                             {"ratio_bound_met", ok ? "true" : "false"},
                             {"M_le_m2_over_6", simple ? "true" : "false"}}};
    return v;
}

UniformExponent uniform_free_exponent(const CurveSystem& A) {
    if (A.h < 3) throw not_applicable("the uniform exponent bound is for h >= 3");
    SystemStats s = stats(A);
    UniformExponent u;
    u.threshold = Rat(6) * *s.max_ratio;
    u.n = std::max(1LL, u.threshold.ceil());
    u.verdict.question = Question::Freeness;
    u.verdict.status = Status::Yes;
    u.verdict.kind = CertKind::Theorem;
    u.verdict.theorem = TheoremCert{"uniform-free-exponent",
                                    {{"max_ratio", s.max_ratio->str()},
                                     {"threshold", u.threshold.str()},
                                     {"n", std::to_string(u.n)}}};
    return u;
}

UniformExponent uniform_relpa_exponent(const CurveSystem& A) {
    if (!A.pairwise_filling)
        throw not_applicable("the relative-pA bound needs pairwise filling curves");
    SystemStats s = stats(A);
    if (s.min_inter < 2) throw not_applicable("the relative-pA bound needs m >= 2");
    UniformExponent u;
    Rat a = Rat(6 * s.max_inter, s.min_inter);
    Rat b = Rat(4 * s.max_inter, s.min_inter) + Rat(5);
    u.threshold = rat_max(a, b);
    u.n = std::max(1LL, u.threshold.ceil());
    u.verdict.question = Question::RelativePA;
    u.verdict.status = Status::Yes;
    u.verdict.kind = CertKind::Theorem;
    u.verdict.theorem = TheoremCert{"pairwise-filling-relpa-exponent",
                                    {{"m", std::to_string(s.min_inter)},
                                     {"M", std::to_string(s.max_inter)},
                                     {"threshold", u.threshold.str()},
                                     {"n", std::to_string(u.n)}}};
    return u;
}

CurveSystem unit_triple() {
    return CurveSystem::from_slopes({Slope{1, 0}, Slope{0, 1}, Slope{1, 1}});
}

namespace {

struct MuFamily {
    const char* name;
    std::array<long long, 3> required; // sorted exponent requirements
    // mu over sorted roles: entries (mu_10, mu_20, mu_21) as printed in the
    // families (1,1,1), (1/2,1/2,1), (2/3,1/3,1/2).
    std::array<Rat, 3> mu_roles;
};

const std::array<MuFamily, 3>& mu_families() {
    static const std::array<MuFamily, 3> fams = {
        MuFamily{"uniform", {3, 3, 3}, {Rat(1), Rat(1), Rat(1)}},
        MuFamily{"half-half-one", {2, 4, 4}, {Rat(1, 2), Rat(1, 2), Rat(1)}},
        MuFamily{"thirds", {2, 3, 6}, {Rat(2, 3), Rat(1, 3), Rat(1, 2)}},
    };
    return fams;
}

std::vector<std::vector<Rat>> mu_for_family(const MuFamily& f,
                                            const std::array<int, 3>& order) {
    std::vector<std::vector<Rat>> mu(3, std::vector<Rat>(3, Rat(1)));
    auto set = [&mu, &order](int r, int s, Rat v) {
        mu[order[r]][order[s]] = v;
        mu[order[s]][order[r]] = Rat(1) / v;
    };
    set(1, 0, f.mu_roles[0]);
    set(2, 0, f.mu_roles[1]);
    set(2, 1, f.mu_roles[2]);
    return mu;
}

std::array<int, 3> sorted_positions(const std::array<long long, 3>& n) {
    std::array<int, 3> idx = {0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(),
                     [&n](int a, int b) { return n[a] < n[b]; });
    return idx;
}

WitnessCert parabolic_triple_witness(const std::array<long long, 3>& n) {
    CurveSystem A = unit_triple();
    std::array<int, 3> s = sorted_positions(n);
    // The published witnesses have the shape D_b^* D_a^* D_c^*, the middle
    // generator carrying the smallest exponent; try that ordering first and
    // fall back to the remaining ones.
    std::array<std::array<int, 3>, 6> orders = {{{s[1], s[0], s[2]},
                                                 {s[0], s[1], s[2]},
                                                 {s[2], s[0], s[1]},
                                                 {s[0], s[2], s[1]},
                                                 {s[1], s[2], s[0]},
                                                 {s[2], s[1], s[0]}}};
    std::vector<long long> exps(n.begin(), n.end());
    for (const auto& ord : orders) {
        Word w = make_word({Syllable{ord[0], 1}, Syllable{ord[1], 1}, Syllable{ord[2], 1}});
        Mat2 m = word_matrix(w, *A.torus_slopes, exps);
        FixedSlopes fs = fixed_slope(m);
        if (fs.kind == FixedSlopes::Kind::None) continue;
        WitnessCert wc;
        wc.word = w;
        wc.curves = *A.torus_slopes;
        wc.exponents = exps;
        wc.matrix = m;
        wc.fixes = fs;
        check_witness(wc);
        return wc;
    }
    throw inconsistency("no reducible witness found for the exceptional multiset");
}

Rat reciprocal_sum(long long n1, long long n2, long long n3) {
    return Rat(1, n1) + Rat(1, n2) + Rat(1, n3);
}

} // namespace

Verdict torus_triple_free(long long n1, long long n2, long long n3) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw invalid_input("exponents must be positive");
    std::array<long long, 3> n = {n1, n2, n3};
    Rat sum = reciprocal_sum(n1, n2, n3);
    Verdict v;
    v.question = Question::Freeness;

    if (sum <= Rat(1)) {
        std::array<int, 3> order = sorted_positions(n);
        for (const auto& fam : mu_families()) {
            bool fits = true;
            for (int r = 0; r < 3; ++r)
                if (n[order[r]] < fam.required[r]) fits = false;
            if (!fits) continue;

            CurveSystem A = unit_triple();
            PingPongParams P = PingPongParams::triangle(A, mu_for_family(fam, order));
            TheoremCert cert{"torus-triple-free-sum", {{"sum", sum.str()}, {"mu_family", fam.name}}};
            for (int i = 0; i < 3; ++i) {
                ExponentBound b = region_move_bound(i, A, P);
                if (n[i] < b.min_exponent)
                    throw inconsistency("mu family does not cover the certified exponents");
                cert.checked.emplace_back("bound_n" + std::to_string(i + 1), b.bound.str());
            }
            v.status = Status::Yes;
            v.kind = CertKind::Theorem;
            v.theorem = std::move(cert);
            return v;
        }
        throw inconsistency("reciprocal sum <= 1 but no mu family applies");
    }

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (bad_free_multiset(n[i], n[j])) {
                // The two curves meet once, so the pair embeds a non-free
                // two-twist group.
                int u = n[i] <= n[j] ? i : j;
                int w_idx = u == i ? j : i;
                long long k = std::max(n[i], n[j]);
                CurveSystem A = unit_triple();
                WitnessCert w;
                w.curves = *A.torus_slopes;
                w.exponents = {n1, n2, n3};
                if (k == 1) {
                    w.word = syllables({{u, 1}, {w_idx, 1}, {u, 1}});
                    w.equals = syllables({{w_idx, 1}, {u, 1}, {w_idx, 1}});
                } else {
                    long long e = k == 2 ? 4 : 3;
                    w.word = concat(alt_pow(u, w_idx, e), syllables({{u, 1}}));
                    w.equals = concat(syllables({{u, 1}}), alt_pow(u, w_idx, e));
                }
                w.matrix = word_matrix(w.word, w.curves, w.exponents);
                w.fixes = fixed_slope(w.matrix);
                check_witness(w);
                v.status = Status::No;
                v.kind = CertKind::Witness;
                v.witness = std::move(w);
                return v;
            }

    v.status = Status::Unknown;
    v.kind = CertKind::Theorem;
    v.theorem = TheoremCert{"torus-triple-free-sum",
                            {{"sum", sum.str()}, {"reason", "sum exceeds 1, no embedded relation"}}};
    return v;
}

Verdict torus_triple_relpa(long long n1, long long n2, long long n3) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw invalid_input("exponents must be positive");
    std::array<long long, 3> n = {n1, n2, n3};
    std::array<long long, 3> m = n;
    std::sort(m.begin(), m.end());
    Rat sum = reciprocal_sum(n1, n2, n3);
    Verdict v;
    v.question = Question::RelativePA;

    if (sum < Rat(1)) {
        v.status = Status::Yes;
        v.kind = CertKind::Theorem;
        v.theorem = TheoremCert{"torus-triple-relpa-sum", {{"sum", sum.str()}}};
        return v;
    }
    bool reducible_case = (m[0] == 2 && m[1] == 2) ||
                          (m[0] == 2 && m[1] == 3 && m[2] == 6) ||
                          (m[0] == 2 && m[1] == 4 && m[2] == 4);
    if (reducible_case) {
        v.status = Status::No;
        v.kind = CertKind::Witness;
        v.witness = parabolic_triple_witness(n);
        return v;
    }
    v.status = Status::Unknown;
    v.kind = CertKind::Theorem;
    v.theorem = TheoremCert{"torus-triple-relpa-sum",
                            {{"sum", sum.str()}, {"reason", "open exponent multiset"}}};
    return v;
}

} // namespace twist
