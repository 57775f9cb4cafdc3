#include "doctest.h"

#include "twistcert/certificates.hpp"
#include "twistcert/errors.hpp"
#include "twistcert/oracle.hpp"

#include <random>

using namespace twist;

namespace {

Slope S(long long p, long long q) { return make_slope(p, q); }

PingPongParams triple_mu(Rat m21, Rat m31, Rat m32) {
    std::vector<std::vector<Rat>> mu(3, std::vector<Rat>(3, Rat(1)));
    mu[1][0] = m21; mu[0][1] = Rat(1) / m21;
    mu[2][0] = m31; mu[0][2] = Rat(1) / m31;
    mu[2][1] = m32; mu[1][2] = Rat(1) / m32;
    return PingPongParams::from_mu(mu);
}

} // namespace

TEST_CASE("pair exponent thresholds") {
    CHECK(pair_min_exponents(1, Rat(2)) == std::pair<long long, long long>{1, 4});
    CHECK(pair_min_exponents(2, Rat(1)) == std::pair<long long, long long>{1, 1});
    CHECK(pair_min_exponents(1, Rat(1)) == std::pair<long long, long long>{2, 2});
    CHECK(pair_min_exponents(3, Rat(4, 3)) == std::pair<long long, long long>{1, 1});
    CHECK_THROWS_AS(pair_min_exponents(0, Rat(1)), not_applicable);
}

TEST_CASE("two-twist freeness classification") {
    CHECK(classify_free_2(0, 3, 5).status == Status::No);
    CHECK(classify_free_2(2, 1, 1).status == Status::Yes);
    CHECK(classify_free_2(1, 2, 2).status == Status::Yes);
    CHECK(classify_free_2(1, 1, 4).status == Status::Yes);
    for (auto [n1, n2] : {std::pair<long long, long long>{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}) {
        Verdict v = classify_free_2(1, n1, n2);
        CHECK(v.status == Status::No);
        REQUIRE(v.witness.has_value());
        check_witness(*v.witness); // relation words really agree
    }
    // symmetry in the exponents
    for (long long m = 0; m <= 3; ++m)
        for (long long n1 = 1; n1 <= 5; ++n1)
            for (long long n2 = 1; n2 <= 5; ++n2)
                CHECK(classify_free_2(m, n1, n2).status == classify_free_2(m, n2, n1).status);
    CHECK_THROWS_AS(classify_free_2(1, 0, 1), invalid_input);
}

TEST_CASE("the three relation pairs and their intermediate identities") {
    std::vector<Slope> ab = {S(1, 0), S(0, 1)};
    Word ab1 = make_word({{0, 1}, {1, 1}});
    // (a b^2)^2 = (a b)^3 = -I and (a b^3)^3 = (a b)^6 = I
    CHECK(word_matrix(word_pow(ab1, 2), ab, {1, 2}) == kMinusIdentity);
    CHECK(word_matrix(word_pow(ab1, 3), ab, {1, 1}) == kMinusIdentity);
    CHECK(word_matrix(word_pow(ab1, 3), ab, {1, 3}) == kIdentity);
    CHECK(word_matrix(word_pow(ab1, 6), ab, {1, 1}) == kIdentity);
    for (int k = 1; k <= 3; ++k) {
        WitnessCert w = nonfree_relation_2(k);
        check_witness(w);
        if (k == 1) CHECK(w.matrix == Mat2{0, -1, 1, 0});
    }
    CHECK_THROWS_AS(nonfree_relation_2(4), invalid_input);
}

TEST_CASE("two-twist relative pseudo-Anosov classification") {
    CHECK_THROWS_AS(classify_relpa_2(0, 1, 1), not_applicable);
    CHECK(classify_relpa_2(3, 1, 1).status == Status::Yes);
    CHECK(classify_relpa_2(2, 1, 2).status == Status::Yes);
    CHECK(classify_relpa_2(1, 1, 4).status == Status::Yes);

    Verdict m2 = classify_relpa_2(2, 1, 1);
    CHECK(m2.status == Status::No);
    REQUIRE(m2.witness.has_value());
    CHECK(m2.witness->fixes == FixedSlopes{FixedSlopes::Kind::One, S(1, 1)});

    Verdict sq = classify_relpa_2(1, 2, 2);
    CHECK(sq.status == Status::No);
    REQUIRE(sq.witness.has_value());
    CHECK(sq.witness->fixes == FixedSlopes{FixedSlopes::Kind::One, S(1, 1)});
    CHECK(sq.witness->matrix.trace() == -2);

    for (auto [n1, n2] : {std::pair<long long, long long>{1, 1}, {1, 2}, {1, 3}}) {
        Verdict v = classify_relpa_2(1, n1, n2);
        CHECK(v.status == Status::No);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->matrix == kIdentity); // a relation, reducible on larger surfaces
    }
    for (long long m = 1; m <= 3; ++m)
        for (long long n1 = 1; n1 <= 5; ++n1)
            for (long long n2 = 1; n2 <= 5; ++n2)
                CHECK(classify_relpa_2(m, n1, n2).status == classify_relpa_2(m, n2, n1).status);
}

TEST_CASE("region move bounds reproduce the three mu families") {
    CurveSystem T = unit_triple();
    {
        PingPongParams P = PingPongParams::triangle(T, PingPongParams::uniform(3).mu);
        for (int i = 0; i < 3; ++i) {
            ExponentBound b = region_move_bound(i, T, P);
            CHECK(b.bound == Rat(3));
            CHECK(b.min_exponent == 3);
        }
    }
    {
        PingPongParams P =
            PingPongParams::triangle(T, triple_mu(Rat(1, 2), Rat(1, 2), Rat(1)).mu);
        long long want[3] = {2, 4, 4};
        for (int i = 0; i < 3; ++i)
            CHECK(region_move_bound(i, T, P).min_exponent == want[i]);
    }
    {
        PingPongParams P =
            PingPongParams::triangle(T, triple_mu(Rat(2, 3), Rat(1, 3), Rat(1, 2)).mu);
        long long want[3] = {2, 3, 6};
        for (int i = 0; i < 3; ++i)
            CHECK(region_move_bound(i, T, P).min_exponent == want[i]);
    }
    // two curves: only the first family applies, matching the pair bound
    CurveSystem A = CurveSystem::from_slopes({S(1, 0), S(1, 2)});
    PingPongParams P2 = PingPongParams::from_mu_upper(2, {Rat(2)});
    CHECK(region_move_bound_pair(0, 1, A, P2) == Rat(2) / (Rat(2) * Rat(2)));
    CHECK(region_move_bound_pair(1, 0, A, P2) == Rat(2) * Rat(2) / Rat(2));
}

TEST_CASE("lambda from pairwise filling") {
    CurveSystem A = CurveSystem::from_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}, false, true);
    PingPongParams P = PingPongParams::from_filling(A, PingPongParams::uniform(3).mu);
    CHECK(P.ratio_implied);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (i != j && j != k && i != k) CHECK(*P.lambda[i][j][k] == Rat(16));

    CurveSystem B = CurveSystem::from_slopes({S(3, 1), S(1, 3), S(2, 3)});
    PingPongParams Q = PingPongParams::from_filling(B, PingPongParams::uniform(3).mu);
    // (a_i,a_j) = 7, (a_k,a_j) = 3, (a_i,a_k) = 8 with (i,j,k) = (1,3,2)
    CHECK(*Q.lambda[0][2][1] == Rat(77, 2));

    // monotone in mu: smaller mu gives smaller lambda
    auto mu_small = triple_mu(Rat(1, 2), Rat(1), Rat(1)).mu;
    PingPongParams R = PingPongParams::from_filling(B, mu_small);
    CHECK(*R.lambda[1][0][2] < *Q.lambda[1][0][2]); // mu_21 dropped from 1 to 1/2

    CurveSystem C = CurveSystem::from_matrix({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(PingPongParams::from_filling(C, PingPongParams::uniform(2).mu),
                    not_applicable);
}

TEST_CASE("norm growth bounds") {
    CurveSystem T = unit_triple();
    PingPongParams P = PingPongParams::uniform(3).with_lambda_const(Rat(2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(norm_growth_bound(i, j, T, P) == Rat(3));

    // two curves: the sum is empty, 2 mu_ji / ||a_i||
    CurveSystem A = CurveSystem::from_slopes({S(1, 0), S(1, 2)});
    PingPongParams Q = PingPongParams::from_mu_upper(2, {Rat(3, 2)});
    CHECK(norm_growth_bound(0, 1, A, Q) == Rat(2) * Rat(2, 3) / Rat(2));
    CHECK(norm_growth_bound(1, 0, A, Q) == Rat(2) * Rat(3, 2) / Rat(2));

    // independently recomputed value for the spread triple
    CurveSystem B = CurveSystem::from_slopes({S(3, 1), S(1, 3), S(2, 3)});
    PingPongParams R = PingPongParams::from_filling(B, PingPongParams::uniform(3).mu);
    // i = 0, j = 1: (2/||a_1||)(mu_10 + lambda_102 * (a_2,a_3)/(a_2,a_1))
    Rat lam = Rat(2 * 8) * (Rat(1) + Rat(7, 3)) * Rat(2); // lambda_{213} in 1-based labels
    Rat expect = Rat(2) / Rat(8 + 7) * (Rat(1) + lam * Rat(3) / Rat(8));
    CHECK(norm_growth_bound(0, 1, B, R) == expect);
}

TEST_CASE("unit-exponent freeness needs the one-sixth ratio bound") {
    CurveSystem six = CurveSystem::from_matrix({{0, 6, 6}, {6, 0, 6}, {6, 6, 0}});
    CHECK(unit_exponent_free_check(six).status == Status::Yes);
    CHECK(unit_exponent_free_check(unit_triple()).status == Status::Unknown);
    CurveSystem spread = CurveSystem::from_slopes({S(3, 1), S(1, 3), S(2, 3)});
    CHECK(unit_exponent_free_check(spread).status == Status::Unknown);
}

TEST_CASE("uniform exponent bounds") {
    CurveSystem spread = CurveSystem::from_slopes({S(3, 1), S(1, 3), S(2, 3)});
    UniformExponent f = uniform_free_exponent(spread);
    CHECK(f.n == 3);
    CHECK(f.threshold == Rat(48, 21));
    CHECK(uniform_free_exponent(unit_triple()).n == 6);
    CurveSystem six = CurveSystem::from_matrix({{0, 6, 6}, {6, 0, 6}, {6, 6, 0}});
    CHECK(uniform_free_exponent(six).n == 1);

    UniformExponent r = uniform_relpa_exponent(spread);
    CHECK(r.n == 16); // max(16, 47/3)
    CurveSystem two = CurveSystem::from_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}, false, true);
    CHECK(uniform_relpa_exponent(two).n == 9); // max(6, 9)
    CHECK_THROWS_AS(uniform_relpa_exponent(unit_triple()), not_applicable); // m = 1
}

TEST_CASE("torus triple freeness") {
    CHECK(torus_triple_free(3, 3, 3).status == Status::Yes);
    CHECK(torus_triple_free(2, 4, 4).status == Status::Yes);
    CHECK(torus_triple_free(4, 2, 4).status == Status::Yes);
    CHECK(torus_triple_free(2, 3, 6).status == Status::Yes);
    CHECK(torus_triple_free(6, 3, 2).status == Status::Yes);
    CHECK(torus_triple_free(2, 3, 7).status == Status::Yes);
    CHECK(torus_triple_free(1, 4, 4).status == Status::Unknown);
    CHECK(torus_triple_free(2, 2, 9).status == Status::Unknown);
    Verdict bad = torus_triple_free(1, 1, 5);
    CHECK(bad.status == Status::No);
    REQUIRE(bad.witness.has_value());
    check_witness(*bad.witness);
    CHECK(torus_triple_free(5, 1, 3).status == Status::No);
}

TEST_CASE("torus triple freeness is monotone") {
    for (long long n1 = 1; n1 <= 6; ++n1)
        for (long long n2 = 1; n2 <= 6; ++n2)
            for (long long n3 = 1; n3 <= 6; ++n3) {
                if (torus_triple_free(n1, n2, n3).status != Status::Yes) continue;
                CHECK(torus_triple_free(n1 + 1, n2, n3).status == Status::Yes);
                CHECK(torus_triple_free(n1, n2 + 1, n3).status == Status::Yes);
                CHECK(torus_triple_free(n1, n2, n3 + 1).status == Status::Yes);
            }
}

TEST_CASE("torus triple relative pseudo-Anosov") {
    CHECK(torus_triple_relpa(2, 4, 5).status == Status::Yes);
    CHECK(torus_triple_relpa(3, 3, 4).status == Status::Yes);

    Verdict v244 = torus_triple_relpa(2, 4, 4);
    CHECK(v244.status == Status::No);
    REQUIRE(v244.witness.has_value());
    CHECK(v244.witness->fixes == FixedSlopes{FixedSlopes::Kind::One, S(1, 2)});

    Verdict v236 = torus_triple_relpa(2, 3, 6);
    CHECK(v236.status == Status::No);
    CHECK(v236.witness->fixes == FixedSlopes{FixedSlopes::Kind::One, S(2, 3)});

    Verdict v225 = torus_triple_relpa(2, 2, 5);
    CHECK(v225.status == Status::No);
    CHECK(v225.witness->fixes == FixedSlopes{FixedSlopes::Kind::One, S(1, 1)});

    // permuted inputs still produce a verified reducible witness
    const long long perms[][3] = {{4, 2, 4}, {4, 4, 2}, {6, 2, 3}, {3, 6, 2}, {5, 2, 2}, {2, 5, 2}};
    for (const auto& p : perms) {
        Verdict v = torus_triple_relpa(p[0], p[1], p[2]);
        CHECK(v.status == Status::No);
        REQUIRE(v.witness.has_value());
        check_witness(*v.witness);
        CHECK(v.witness->fixes.kind != FixedSlopes::Kind::None);
    }

    CHECK(torus_triple_relpa(1, 9, 9).status == Status::Unknown);
    CHECK(torus_triple_relpa(2, 3, 4).status == Status::Unknown);
    CHECK(torus_triple_relpa(2, 3, 5).status == Status::Unknown);
    CHECK(torus_triple_relpa(3, 3, 3).status == Status::Unknown);
    CHECK(torus_triple_relpa(2, 3, 3).status == Status::Unknown);
}

TEST_CASE("bound calculators are minimal (spot checks with independent formulas)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int h = 3 + (int)(rng() % 2);
        std::vector<std::vector<long long>> m(h, std::vector<long long>(h, 0));
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) m[i][j] = m[j][i] = 1 + (long long)(rng() % 20);
        CurveSystem A = CurveSystem::from_matrix(m);
        std::vector<std::vector<Rat>> mu(h, std::vector<Rat>(h, Rat(1)));
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                mu[i][j] = Rat(1 + (long long)(rng() % 5), 1 + (long long)(rng() % 5));
                mu[j][i] = Rat(1) / mu[i][j];
            }
        PingPongParams P = PingPongParams::from_mu(mu).with_lambda_const(
            Rat(1) + Rat(1 + (long long)(rng() % 8), 1 + (long long)(rng() % 4)));

        for (int i = 0; i < h; ++i) {
            ExponentBound b = region_move_bound(i, A, P);
            // n satisfies every family and n - 1 violates at least one
            CHECK(Rat(b.min_exponent) >= b.bound);
            CHECK(Rat(b.min_exponent - 1) < b.bound);
            // the bound is the maximum of the per-pair values
            Rat mx(0);
            for (int j = 0; j < h; ++j)
                if (j != i) mx = rat_max(mx, region_move_bound_pair(i, j, A, P));
            CHECK(mx == b.bound);
        }
    }
}
