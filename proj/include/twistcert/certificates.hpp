#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcert/curve_system.hpp"
#include "twistcert/pingpong.hpp"
#include "twistcert/rational.hpp"
#include "twistcert/word.hpp"

namespace twist {

enum class Question { Freeness, RelativePA };
enum class Status { Yes, No, Unknown };
enum class CertKind { Theorem, BoundedVerification, Witness };

// A closed-form criterion that was applied, with the values it checked,
// rendered exactly (rationals as "p/q").
struct TheoremCert {
    std::string tag;
    std::vector<std::pair<std::string, std::string>> checked;

    friend bool operator==(const TheoremCert& a, const TheoremCert& b) {
        return a.tag == b.tag && a.checked == b.checked;
    }
};

// A machine-checkable witness over a torus realization. With a partner word
// it is a relation (both sides evaluate to the same matrix, so
// word * partner^-1 is a nontrivial word mapping to I); without one it is a
// reducible element together with what it fixes (+-I fixes everything).
struct WitnessCert {
    Word word;
    std::optional<Word> equals;
    std::vector<Slope> curves;
    std::vector<long long> exponents;
    Mat2 matrix;
    FixedSlopes fixes;

    friend bool operator==(const WitnessCert& a, const WitnessCert& b) {
        return a.word == b.word && a.equals == b.equals && a.curves == b.curves &&
               a.exponents == b.exponents && a.matrix == b.matrix && a.fixes == b.fixes;
    }
};

// Certified answer to one of the two questions. A "no" always carries a
// witness when a torus realization exists; a theorem-backed "yes" names the
// criterion and the checked hypothesis values.
struct Verdict {
    Question question = Question::Freeness;
    Status status = Status::Unknown;
    CertKind kind = CertKind::Theorem;
    std::optional<TheoremCert> theorem;
    std::optional<WitnessCert> witness;
};

// Verifies the witness on its stated realization; throws inconsistency on
// failure. Called by every constructor that emits one.
void check_witness(const WitnessCert& w);

// Smallest exponents (na, nb) with m*na >= 2/lam and m*nb >= 2*lam, the
// conditions for D_a/D_b powers to ping-pong between N_{a,lam} and
// N_{b,1/lam}.
std::pair<long long, long long> pair_min_exponents(long long m, Rat lam);

// Complete answer for two twist powers: free unless the curves are disjoint
// or they meet once with exponent multiset {1,1}, {1,2} or {1,3}; the
// non-free cases come with an explicit relation.
Verdict classify_free_2(long long m, long long n1, long long n2);

// Complete answer for relative pseudo-Anosov with two twist powers; meets
// the published table (m >= 3, or m = 2 with (n1,n2) != (1,1), or m = 1
// with {n1,n2} outside {1,1},{1,2},{1,3},{2,2}). Disjoint curves are
// rejected as not applicable.
Verdict classify_relpa_2(long long m, long long n1, long long n2);

// The relation pair for the non-free (a,b)=1 cases: k=1 the braid relation
// (aba, bab), k=2 ((ab)^4 a, a (ab)^4) in <a, b^2>, k=3 ((ab)^3 a, a (ab)^3)
// in <a, b^3>. Verified against the standard torus pair.
WitnessCert nonfree_relation_2(int k);

// Lower bound on n making D_{a_i}^{+-n}(N_{a_j}) land in N_{a_i}, maximized
// over j, plus its ceiling. With ratio_implied only the two mu-condition
// families apply; otherwise all five term families are evaluated and every
// lambda they touch must be finite.
struct ExponentBound {
    Rat bound;
    long long min_exponent = 0;
};

Rat region_move_bound_pair(int i, int j, const CurveSystem& A, const PingPongParams& P);
ExponentBound region_move_bound(int i, const CurveSystem& A, const PingPongParams& P);

// Norm-growth threshold: D_{a_i}^{+-n} grows ||.||_A on N_{a_j} once
// n >= (2/||a_i||)(mu_ji + sum_k lambda_jik (a_j,a_k)/(a_j,a_i)).
Rat norm_growth_bound(int i, int j, const CurveSystem& A, const PingPongParams& P);

// Freeness at exponent one when every ordered triple satisfies
// (a_i,a_k) <= (a_i,a_j)(a_j,a_k)/6; also reports the cruder sufficient
// condition M <= m^2/6. Unknown otherwise.
Verdict unit_exponent_free_check(const CurveSystem& A);

// Smallest uniform n >= 6*M0 certifying freeness of the n-th powers.
struct UniformExponent {
    long long n = 0;
    Rat threshold;
    Verdict verdict;
};

UniformExponent uniform_free_exponent(const CurveSystem& A);

// Smallest uniform n >= max(6M/m, 4M/m + 5) certifying relative
// pseudo-Anosov when every pair fills and m >= 2.
UniformExponent uniform_relpa_exponent(const CurveSystem& A);

// The three standard slopes (1,0), (0,1), (1,1) with pairwise intersection
// one.
CurveSystem unit_triple();

// Freeness of <D_a^{n1}, D_b^{n2}, D_c^{n3}> on the torus triple: certified
// exactly when 1/n1 + 1/n2 + 1/n3 <= 1, by one of the three mu families
// ((1,1,1), (1/2,1/2,1), (2/3,1/3,1/2)) applied along the sorted exponents;
// refuted when some pair embeds a non-free two-twist case; unknown
// otherwise.
Verdict torus_triple_free(long long n1, long long n2, long long n3);

// Relative pseudo-Anosov for the torus triple: yes when the reciprocal sum
// is below one; no with a parabolic witness for multisets {2,2,*}, {2,3,6},
// {2,4,4}; open (unknown) for {1,*,*}, {2,3,4}, {2,3,5}, {3,3,3}.
Verdict torus_triple_relpa(long long n1, long long n2, long long n3);

} // namespace twist
