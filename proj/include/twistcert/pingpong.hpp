#pragma once

#include <optional>
#include <vector>

#include "twistcert/curve_system.hpp"
#include "twistcert/rational.hpp"
#include "twistcert/word.hpp"

namespace twist {

// Parameters of the regions
//   N_{a_i} = { x : (x,a_i) < mu_ij (x,a_j)  for all j != i,  and
//               (x,a_k)/(x,a_j) < lambda_ijk (a_i,a_k)/(a_i,a_j)
//               for all ordered pairs j != k, both != i }.
// A missing lambda entry stands for infinity: that ratio condition is
// dropped. When ratio_implied is set the ratio conditions are known to
// follow from the mu conditions (pairwise-filling bound, or the triangle
// identity on the torus triple), so membership tests skip them while bound
// calculators may still use the lambda values as source estimates.
struct PingPongParams {
    int h = 0;
    std::vector<std::vector<Rat>> mu;                          // mu[i][j], diagonal unused
    std::vector<std::vector<std::vector<std::optional<Rat>>>> lambda;
    bool ratio_implied = false;

    // All mu = 1, all lambda infinite.
    static PingPongParams uniform(int h);

    // Validates positivity and the reciprocity mu[j][i] = 1/mu[i][j].
    static PingPongParams from_mu(std::vector<std::vector<Rat>> mu);

    // Upper-triangle input mu_{ij} for i < j, row-major.
    static PingPongParams from_mu_upper(int h, const std::vector<Rat>& upper);

    // Sets every defined lambda entry to the given constant (> 1).
    PingPongParams with_lambda_const(Rat lam) const;

    // lambda_ijk = 2 (a_i,a_j) (1 + (a_k,a_j)/(a_i,a_k)) (mu_ij + 1);
    // with these values the ratio conditions are implied for pairwise
    // filling systems, so regions equal their mu-only versions.
    static PingPongParams from_filling(const CurveSystem& A, std::vector<std::vector<Rat>> mu);

    // lambda_ijk = 1 + mu_ij for the torus triple with pairwise
    // intersection one; valid when mu_ji + mu_ki >= 1 for all i, j != k.
    static PingPongParams triangle(const CurveSystem& A, std::vector<std::vector<Rat>> mu);

    std::optional<Rat> lam(int i, int j, int k) const { return lambda[i][j][k]; }
};

// Region memberships of an intersection profile; disjointness makes this a
// list of at most one index for valid parameters, but all matches are
// returned so the property can be tested. Throws outside_domain when the
// profile has zero norm.
std::vector<int> regions_of(const std::vector<long long>& profile, const CurveSystem& A,
                            const PingPongParams& P);

bool in_region(const std::vector<long long>& profile, int i, const CurveSystem& A,
               const PingPongParams& P);
bool in_region(Slope x, int i, const CurveSystem& A, const PingPongParams& P);

// -1 when x lies in no region.
int region_of(Slope x, const CurveSystem& A, const PingPongParams& P);

// All enumerated slopes of height <= H with positive norm lying in no
// region, in slope order.
std::vector<Slope> exceptional_curves(const CurveSystem& A, const PingPongParams& P,
                                      long long height);

// The three verification modes:
//   Strict      - region moves only (plain ping-pong);
//   NormGrowth  - moves, strict ||.||_A growth, and full coverage;
//   Weak        - moves and growth on covered curves, with uncovered curves
//                 required to be absorbed by every reduced word of exactly
//                 n0 syllables (a suffix landing in its own generator's
//                 region qualifies), and never fixed by words of <= n0
//                 syllables.
// All modes are bounded evidence over curves of height <= H and powers up
// to power_bound, not proofs.
enum class PingPongMode { Strict, NormGrowth, Weak };

struct VerifyOptions {
    long long height = 20;
    long long power_bound = 5;
    int n0 = 1;
    // Overrides the per-mode default (off for Strict, on otherwise), so
    // plain region moves can be checked together with norm growth without
    // demanding coverage.
    std::optional<bool> norm_growth;
};

struct MoveViolation {
    Slope x{};
    int from_region = -1;
    int gen = -1;
    long long step = 0; // signed multiple of the generator exponent
    Slope image{};
    bool norm_failure = false; // false: image left the target region

    friend bool operator==(const MoveViolation& a, const MoveViolation& b) {
        return a.x == b.x && a.from_region == b.from_region && a.gen == b.gen &&
               a.step == b.step && a.image == b.image && a.norm_failure == b.norm_failure;
    }
};

struct WordViolation {
    Slope x{};
    Word word;
    bool fixes_exceptional = false; // false: no suffix of the word absorbed x

    friend bool operator==(const WordViolation& a, const WordViolation& b) {
        return a.x == b.x && a.word == b.word && a.fixes_exceptional == b.fixes_exceptional;
    }
};

struct VerificationReport {
    PingPongMode mode = PingPongMode::Strict;
    long long height = 0;
    long long power_bound = 0;
    int n0 = 0;
    std::vector<Slope> uncovered;            // exceptional set in Weak mode
    std::vector<MoveViolation> move_violations;
    std::vector<WordViolation> word_violations;
    long long checked_slopes = 0;
    long long checked_moves = 0;
    long long checked_words = 0;
    bool pass = false;
};

VerificationReport verify_ping_pong(const CurveSystem& A,
                                    const std::vector<long long>& exponents,
                                    const PingPongParams& P, PingPongMode mode,
                                    const VerifyOptions& opt);

} // namespace twist
