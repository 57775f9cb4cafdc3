#include "doctest.h"

#include "twistcert/certificates.hpp"
#include "twistcert/errors.hpp"
#include "twistcert/pingpong.hpp"
#include "twistcert/report.hpp"

using namespace twist;
using nlohmann::json;

namespace {
Slope S(long long p, long long q) { return make_slope(p, q); }
} // namespace

TEST_CASE("curve system files load and validate") {
    json good = {{"h", 3},
                 {"intersection", {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}},
                 {"torus_slopes", {{1, 0}, {0, 1}, {1, 1}}}};
    CurveSystem A = load_curve_system(good);
    CHECK(A.h == 3);
    CHECK(A.pairwise_filling); // derived from distinct slopes
    CHECK_FALSE(A.punctured);

    json no_slopes = {{"h", 2}, {"intersection", {{0, 5}, {5, 0}}}};
    CurveSystem B = load_curve_system(no_slopes);
    CHECK_FALSE(B.torus_slopes.has_value());
    CHECK_FALSE(B.pairwise_filling);

    auto message_of = [](const json& j) {
        try {
            load_curve_system(j);
        } catch (const invalid_input& e) {
            return std::string(e.what());
        }
        return std::string();
    };

    CHECK(message_of({{"intersection", {{0}}}}).find("/h") != std::string::npos);
    CHECK(message_of({{"h", 2}, {"intersection", {{0, 1}, {2, 0}}}})
              .find("symmetric") != std::string::npos);
    CHECK(message_of({{"h", 2},
                      {"intersection", {{0, 2}, {2, 0}}},
                      {"torus_slopes", {{2, 4}, {0, 1}}}})
              .find("/torus_slopes/0") != std::string::npos);
    CHECK(message_of({{"h", 2},
                      {"intersection", {{0, 7}, {7, 0}}},
                      {"torus_slopes", {{1, 0}, {0, 1}}}})
              .find("does not match") != std::string::npos);
    CHECK(message_of({{"h", 2},
                      {"intersection", {{0, 0}, {0, 0}}},
                      {"torus_slopes", {{1, 0}, {1, 0}}},
                      {"pairwise_filling", true}})
              .find("fill") != std::string::npos);

    // a loaded system echoes back to the same content
    json echo = curve_system_to_json(A);
    CurveSystem A2 = load_curve_system(echo);
    CHECK(A2.inter == A.inter);
    CHECK(A2.torus_slopes == A.torus_slopes);
}

TEST_CASE("bundled corpus files load") {
    for (const char* name : {"triple_unit.json", "triple_spread.json", "pair_m1.json",
                             "pair_m2.json", "pair_m3.json"}) {
        CurveSystem A =
            load_curve_system_file(std::string(TWISTCERT_DATA_DIR) + "/" + name);
        CHECK(A.h >= 2);
        CHECK(A.torus_slopes.has_value());
    }
}

TEST_CASE("reports round-trip losslessly and deterministically") {
    std::vector<CertificateReport> reports;

    reports.push_back(report_from_verdict("classify2", json{{"m", 1}, {"n1", 1}, {"n2", 3}},
                                          classify_free_2(1, 1, 3)));
    reports.push_back(report_from_verdict("classify2", json{{"m", 2}, {"n1", 1}, {"n2", 1}},
                                          classify_relpa_2(2, 1, 1)));
    reports.push_back(report_from_verdict("torus-triple", json{{"exponents", {2, 4, 4}}},
                                          torus_triple_relpa(2, 4, 4)));
    reports.push_back(report_from_verdict("torus-triple", json{{"exponents", {3, 3, 3}}},
                                          torus_triple_relpa(3, 3, 3)));

    CertificateReport with_verification;
    with_verification.command = "verify";
    with_verification.input = json{{"exponents", {3, 3, 4}}};
    with_verification.question = Question::RelativePA;
    with_verification.status = Status::Unknown;
    with_verification.kind = CertKind::BoundedVerification;
    VerifyOptions opt;
    opt.height = 8;
    opt.n0 = 3;
    with_verification.verification = verify_ping_pong(
        unit_triple(), {3, 3, 4}, PingPongParams::uniform(3), PingPongMode::Weak, opt);
    with_verification.extra["note"] = json::array({1, 2});
    reports.push_back(with_verification);

    for (const CertificateReport& r : reports) {
        json j = to_json(r);
        CertificateReport back = report_from_json(j);
        CHECK(back == r);
        CHECK(to_json(back) == j);
        CHECK(to_json(r).dump(2) == j.dump(2)); // byte-deterministic
        CHECK(j.at("tool").at("name") == kToolName);
    }
}

TEST_CASE("exact rationals render as fraction strings in reports") {
    CurveSystem spread = CurveSystem::from_slopes({S(3, 1), S(1, 3), S(2, 3)});
    UniformExponent u = uniform_free_exponent(spread);
    json j = to_json(*u.verdict.theorem);
    bool found = false;
    for (const auto& e : j.at("checked"))
        if (e.at(0) == "max_ratio") {
            CHECK(e.at(1) == "8/21");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("fixed-slope serialization covers all three cases") {
    CHECK(to_json(FixedSlopes{FixedSlopes::Kind::All, {}}) == json("all"));
    CHECK(to_json(FixedSlopes{FixedSlopes::Kind::None, {}}).is_null());
    CHECK(to_json(FixedSlopes{FixedSlopes::Kind::One, S(1, 2)}) == json::array({1, 2}));
    CHECK(fixes_from_json(json("all")).kind == FixedSlopes::Kind::All);
    CHECK(fixes_from_json(json(nullptr)).kind == FixedSlopes::Kind::None);
    CHECK(fixes_from_json(json::array({1, 2})) ==
          FixedSlopes{FixedSlopes::Kind::One, S(1, 2)});
}
