#include "doctest.h"

#include "twistcert/cli.hpp"

#include <sstream>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = twist::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const char* name) {
    return std::string(TWISTCERT_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("classify2 produces verdicts and witnesses") {
    auto r = run({"classify2", "--m", "1", "--n1", "1", "--n2", "3", "--question", "free",
                  "--json", "-"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "no");
    CHECK(j["question"] == "freeness");
    CHECK(j["certificate"]["kind"] == "witness");
    CHECK(j["certificate"]["witnesses"].size() == 1);

    auto yes = run({"classify2", "--m", "3", "--n1", "1", "--n2", "1", "--question", "relpa",
                    "--cross-check"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("yes") != std::string::npos);
}

TEST_CASE("classify2 rejects disjoint curves for relative pA") {
    auto r = run({"classify2", "--m", "0", "--n1", "1", "--n2", "1", "--question", "relpa"});
    CHECK(r.code == 2);
    CHECK(r.err.find("disjoint") != std::string::npos);
}

TEST_CASE("torus-triple subcommand") {
    auto unknown = run({"torus-triple", "--exponents", "3,3,3", "--question", "relpa"});
    CHECK(unknown.code == 0);
    CHECK(unknown.out.find("unknown") != std::string::npos);

    auto no = run({"torus-triple", "--exponents", "2,4,4", "--question", "relpa", "--json", "-"});
    CHECK(no.code == 0);
    json j = json::parse(no.out);
    CHECK(j["status"] == "no");
    CHECK(j["certificate"]["witnesses"][0]["fixes"] == json::array({1, 2}));

    auto crosschecked =
        run({"torus-triple", "--exponents", "3,3,4", "--question", "relpa", "--cross-check"});
    CHECK(crosschecked.code == 0);

    auto bad = run({"torus-triple", "--exponents", "3,3", "--question", "free"});
    CHECK(bad.code == 2);
}

TEST_CASE("bounds subcommand") {
    auto r33 = run({"bounds", "--input", data_file("triple_spread.json"), "--theorem", "33",
                    "--json", "-"});
    CHECK(r33.code == 0);
    json j = json::parse(r33.out);
    CHECK(j["certificate"]["uniform_exponent"] == 3);

    auto r36 = run({"bounds", "--input", data_file("triple_spread.json"), "--theorem", "36",
                    "--json", "-"});
    CHECK(json::parse(r36.out)["certificate"]["uniform_exponent"] == 16);

    auto r31 = run({"bounds", "--input", data_file("triple_unit.json"), "--lambda", "triangle",
                    "--theorem", "lemma31", "--json", "-"});
    CHECK(r31.code == 0);
    json b = json::parse(r31.out);
    for (const auto& row : b["certificate"]["bounds"]) CHECK(row["min_exponent"] == 3);

    // theorem 36 needs m >= 2
    auto na = run({"bounds", "--input", data_file("triple_unit.json"), "--theorem", "36"});
    CHECK(na.code == 2);
}

TEST_CASE("search subcommand") {
    auto rel = run({"search", "--input", data_file("pair_m1.json"), "--exponents", "1,1",
                    "--mode", "relations", "--max-syllables", "6", "--max-step", "1",
                    "--json", "-"});
    CHECK(rel.code == 0);
    json j = json::parse(rel.out);
    CHECK(j["status"] == "no");
    CHECK(j["question"] == "freeness");
    CHECK(j["certificate"]["found"].get<int>() > 0);

    auto red = run({"search", "--input", data_file("triple_unit.json"), "--exponents", "2,4,4",
                    "--mode", "reducibles", "--max-syllables", "3", "--max-step", "1",
                    "--json", "-"});
    json k = json::parse(red.out);
    CHECK(k["status"] == "no");
    bool fixes_12 = false;
    for (const auto& w : k["certificate"]["witnesses"])
        if (w["fixes"] == json::array({1, 2})) fixes_12 = true;
    CHECK(fixes_12);

    auto clean = run({"search", "--input", data_file("pair_m2.json"), "--exponents", "1,1",
                      "--mode", "relations", "--max-syllables", "5", "--max-step", "2",
                      "--json", "-"});
    CHECK(json::parse(clean.out)["status"] == "unknown");
}

TEST_CASE("verify subcommand") {
    auto ppl = run({"verify", "--input", data_file("triple_unit.json"), "--exponents", "3,3,3",
                    "--mode", "ppl", "--height", "20", "--json", "-"});
    CHECK(ppl.code == 0);
    json j = json::parse(ppl.out);
    CHECK(j["certificate"]["verification"]["pass"] == true);
    CHECK(j["status"] == "unknown"); // bounded evidence only

    auto wpp = run({"verify", "--input", data_file("triple_unit.json"), "--exponents", "3,3,4",
                    "--mode", "wpp", "--height", "20", "--n0", "3", "--json", "-"});
    CHECK(json::parse(wpp.out)["certificate"]["verification"]["pass"] == true);

    auto bad = run({"verify", "--input", data_file("pair_m1.json"), "--exponents", "1,1",
                    "--mode", "ppl", "--height", "15", "--json", "-"});
    CHECK(bad.code == 0);
    CHECK(json::parse(bad.out)["certificate"]["verification"]["pass"] == false);
}

TEST_CASE("bad input is rejected with exit code 2") {
    CHECK(run({"bounds", "--input", "/nonexistent.json"}).code == 2);
    CHECK(run({"classify2", "--m", "-1", "--n1", "1", "--n2", "1", "--question", "free"}).code ==
          2);
    CHECK(run({"classify2", "--m", "1", "--n1", "1", "--n2", "1", "--question", "maybe"}).code ==
          2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"verify", "--input", data_file("pair_m1.json"), "--exponents", "1,1,1",
               "--mode", "ppl"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    auto a = run({"torus-triple", "--exponents", "2,3,6", "--question", "relpa", "--json", "-"});
    auto b = run({"torus-triple", "--exponents", "2,3,6", "--question", "relpa", "--json", "-"});
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
