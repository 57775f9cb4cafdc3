#include "twistcert/report.hpp"

#include <fstream>

#include "twistcert/errors.hpp"

namespace twist {

using nlohmann::json;

namespace {

long long require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw invalid_input(where + ": expected an integer");
    return j.get<long long>();
}

} // namespace

CurveSystem load_curve_system(const json& j) {
    if (!j.is_object()) throw invalid_input("curve system: expected a JSON object");
    if (!j.contains("h")) throw invalid_input("/h: missing");
    long long h = require_int(j.at("h"), "/h");
    if (h < 2) throw invalid_input("/h: need at least two curves");
    if (!j.contains("intersection") || !j.at("intersection").is_array())
        throw invalid_input("/intersection: missing or not an array");
    const json& mat = j.at("intersection");
    if ((long long)mat.size() != h)
        throw invalid_input("/intersection: expected " + std::to_string(h) + " rows");
    std::vector<std::vector<long long>> inter(h);
    for (long long i = 0; i < h; ++i) {
        const json& row = mat.at(i);
        if (!row.is_array() || (long long)row.size() != h)
            throw invalid_input("/intersection/" + std::to_string(i) + ": expected " +
                                std::to_string(h) + " entries");
        for (long long k = 0; k < h; ++k)
            inter[i].push_back(require_int(
                row.at(k), "/intersection/" + std::to_string(i) + "/" + std::to_string(k)));
    }

    bool punctured = false;
    if (j.contains("punctured")) {
        if (!j.at("punctured").is_boolean()) throw invalid_input("/punctured: expected a boolean");
        punctured = j.at("punctured").get<bool>();
    }

    std::optional<std::vector<Slope>> slopes;
    if (j.contains("torus_slopes") && !j.at("torus_slopes").is_null()) {
        const json& ts = j.at("torus_slopes");
        if (!ts.is_array() || (long long)ts.size() != h)
            throw invalid_input("/torus_slopes: expected " + std::to_string(h) + " slopes");
        std::vector<Slope> list;
        for (long long i = 0; i < h; ++i) {
            const json& e = ts.at(i);
            if (!e.is_array() || e.size() != 2)
                throw invalid_input("/torus_slopes/" + std::to_string(i) +
                                    ": expected a pair [p, q]");
            try {
                list.push_back(make_slope(
                    require_int(e.at(0), "/torus_slopes"), require_int(e.at(1), "/torus_slopes")));
            } catch (const invalid_curve& ex) {
                throw invalid_input("/torus_slopes/" + std::to_string(i) + ": " + ex.what());
            }
        }
        slopes = std::move(list);
    }

    CurveSystem A;
    if (slopes) {
        A = CurveSystem::from_slopes(*slopes, punctured);
        for (long long i = 0; i < h; ++i)
            for (long long k = 0; k < h; ++k)
                if (A.inter[i][k] != inter[i][k])
                    throw invalid_input("/intersection/" + std::to_string(i) + "/" +
                                        std::to_string(k) + ": " + std::to_string(inter[i][k]) +
                                        " does not match the slopes (expected " +
                                        std::to_string(A.inter[i][k]) + ")");
        if (j.contains("pairwise_filling")) {
            if (!j.at("pairwise_filling").is_boolean())
                throw invalid_input("/pairwise_filling: expected a boolean");
            bool given = j.at("pairwise_filling").get<bool>();
            if (given && !A.pairwise_filling)
                throw invalid_input("/pairwise_filling: equal slopes do not fill");
            A.pairwise_filling = given;
        }
    } else {
        bool filling = false;
        if (j.contains("pairwise_filling")) {
            if (!j.at("pairwise_filling").is_boolean())
                throw invalid_input("/pairwise_filling: expected a boolean");
            filling = j.at("pairwise_filling").get<bool>();
        }
        A = CurveSystem::from_matrix(std::move(inter), punctured, filling);
    }
    return A;
}

CurveSystem load_curve_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw invalid_input(path + ": " + e.what());
    }
    return load_curve_system(j);
}

json curve_system_to_json(const CurveSystem& A) {
    json j;
    j["h"] = A.h;
    j["intersection"] = A.inter;
    if (A.torus_slopes) {
        json ts = json::array();
        for (Slope s : *A.torus_slopes) ts.push_back({s.p, s.q});
        j["torus_slopes"] = ts;
    }
    j["punctured"] = A.punctured;
    j["pairwise_filling"] = A.pairwise_filling;
    return j;
}

std::string question_str(Question q) {
    return q == Question::Freeness ? "freeness" : "relative-pa";
}

std::string status_str(Status s) {
    switch (s) {
        case Status::Yes: return "yes";
        case Status::No: return "no";
        default: return "unknown";
    }
}

std::string kind_str(CertKind k) {
    switch (k) {
        case CertKind::Theorem: return "theorem";
        case CertKind::BoundedVerification: return "bounded-verification";
        default: return "witness";
    }
}

std::string mode_str(PingPongMode m) {
    switch (m) {
        case PingPongMode::Strict: return "ppl";
        case PingPongMode::NormGrowth: return "ppwtc";
        default: return "wpp";
    }
}

Question parse_question(const std::string& s) {
    if (s == "free" || s == "freeness") return Question::Freeness;
    if (s == "relpa" || s == "relative-pa") return Question::RelativePA;
    throw invalid_input("unknown question '" + s + "' (expected free or relpa)");
}

PingPongMode parse_mode(const std::string& s) {
    if (s == "ppl") return PingPongMode::Strict;
    if (s == "ppwtc") return PingPongMode::NormGrowth;
    if (s == "wpp") return PingPongMode::Weak;
    throw invalid_input("unknown verification mode '" + s + "'");
}

json to_json(Slope s) { return json::array({s.p, s.q}); }

json to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

json to_json(const Word& w) {
    json syls = json::array();
    for (const auto& s : w.syls) syls.push_back({s.gen + 1, s.exp});
    return json{{"syllables", syls}, {"text", w.str()}};
}

json to_json(const FixedSlopes& f) {
    switch (f.kind) {
        case FixedSlopes::Kind::All: return json("all");
        case FixedSlopes::Kind::One: return to_json(f.slope);
        default: return json(nullptr);
    }
}

json to_json(const TheoremCert& t) {
    json checked = json::array();
    for (const auto& [k, v] : t.checked) checked.push_back({k, v});
    return json{{"tag", t.tag}, {"checked", checked}};
}

json to_json(const WitnessCert& w) {
    json j;
    j["word"] = to_json(w.word);
    if (w.equals) j["equals"] = to_json(*w.equals);
    json curves = json::array();
    for (Slope s : w.curves) curves.push_back(to_json(s));
    j["curves"] = curves;
    j["exponents"] = w.exponents;
    j["matrix"] = to_json(w.matrix);
    j["fixes"] = to_json(w.fixes);
    return j;
}

json to_json(const VerificationReport& r) {
    json j;
    j["mode"] = mode_str(r.mode);
    j["height"] = r.height;
    j["power_bound"] = r.power_bound;
    j["n0"] = r.n0;
    j["pass"] = r.pass;
    json unc = json::array();
    for (Slope s : r.uncovered) unc.push_back(to_json(s));
    j["uncovered"] = unc;
    json mv = json::array();
    for (const auto& v : r.move_violations)
        mv.push_back(json{{"x", to_json(v.x)},
                          {"from_region", v.from_region + 1},
                          {"gen", v.gen + 1},
                          {"step", v.step},
                          {"image", to_json(v.image)},
                          {"why", v.norm_failure ? "norm" : "membership"}});
    j["move_violations"] = mv;
    json wv = json::array();
    for (const auto& v : r.word_violations)
        wv.push_back(json{{"x", to_json(v.x)},
                          {"word", to_json(v.word)},
                          {"why", v.fixes_exceptional ? "fixes-exceptional" : "not-absorbed"}});
    j["word_violations"] = wv;
    j["checked_slopes"] = r.checked_slopes;
    j["checked_moves"] = r.checked_moves;
    j["checked_words"] = r.checked_words;
    return j;
}

Slope slope_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw invalid_input("slope: expected [p, q]");
    return make_slope(j.at(0).get<long long>(), j.at(1).get<long long>());
}

Word word_from_json(const json& j) {
    std::vector<Syllable> syls;
    for (const auto& e : j.at("syllables"))
        syls.push_back(Syllable{(int)e.at(0).get<long long>() - 1, e.at(1).get<long long>()});
    return Word(std::move(syls));
}

Mat2 mat_from_json(const json& j) {
    return Mat2{j.at(0).at(0).get<long long>(), j.at(0).at(1).get<long long>(),
                j.at(1).at(0).get<long long>(), j.at(1).at(1).get<long long>()};
}

FixedSlopes fixes_from_json(const json& j) {
    if (j.is_null()) return {FixedSlopes::Kind::None, {}};
    if (j.is_string() && j.get<std::string>() == "all") return {FixedSlopes::Kind::All, {}};
    return {FixedSlopes::Kind::One, slope_from_json(j)};
}

TheoremCert theorem_from_json(const json& j) {
    TheoremCert t;
    t.tag = j.at("tag").get<std::string>();
    for (const auto& e : j.at("checked"))
        t.checked.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return t;
}

WitnessCert witness_from_json(const json& j) {
    WitnessCert w;
    w.word = word_from_json(j.at("word"));
    if (j.contains("equals")) w.equals = word_from_json(j.at("equals"));
    for (const auto& e : j.at("curves")) w.curves.push_back(slope_from_json(e));
    w.exponents = j.at("exponents").get<std::vector<long long>>();
    w.matrix = mat_from_json(j.at("matrix"));
    w.fixes = fixes_from_json(j.at("fixes"));
    return w;
}

VerificationReport verification_from_json(const json& j) {
    VerificationReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.height = j.at("height").get<long long>();
    r.power_bound = j.at("power_bound").get<long long>();
    r.n0 = (int)j.at("n0").get<long long>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& e : j.at("uncovered")) r.uncovered.push_back(slope_from_json(e));
    for (const auto& e : j.at("move_violations")) {
        MoveViolation v;
        v.x = slope_from_json(e.at("x"));
        v.from_region = (int)e.at("from_region").get<long long>() - 1;
        v.gen = (int)e.at("gen").get<long long>() - 1;
        v.step = e.at("step").get<long long>();
        v.image = slope_from_json(e.at("image"));
        v.norm_failure = e.at("why").get<std::string>() == "norm";
        r.move_violations.push_back(v);
    }
    for (const auto& e : j.at("word_violations")) {
        WordViolation v;
        v.x = slope_from_json(e.at("x"));
        v.word = word_from_json(e.at("word"));
        v.fixes_exceptional = e.at("why").get<std::string>() == "fixes-exceptional";
        r.word_violations.push_back(v);
    }
    r.checked_slopes = j.at("checked_slopes").get<long long>();
    r.checked_moves = j.at("checked_moves").get<long long>();
    r.checked_words = j.at("checked_words").get<long long>();
    return r;
}

bool operator==(const CertificateReport& a, const CertificateReport& b) {
    return a.command == b.command && a.input == b.input && a.question == b.question &&
           a.status == b.status && a.kind == b.kind && a.theorem == b.theorem &&
           a.witnesses == b.witnesses &&
           ((!a.verification && !b.verification) ||
            (a.verification && b.verification &&
             to_json(*a.verification) == to_json(*b.verification))) &&
           a.extra == b.extra;
}

json to_json(const CertificateReport& r) {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = r.command;
    j["input"] = r.input;
    if (r.question) j["question"] = question_str(*r.question);
    j["status"] = status_str(r.status);
    json cert;
    cert["kind"] = kind_str(r.kind);
    if (r.theorem) cert["theorem"] = to_json(*r.theorem);
    if (!r.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(to_json(w));
        cert["witnesses"] = ws;
    }
    if (r.verification) cert["verification"] = to_json(*r.verification);
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it) cert[it.key()] = it.value();
    j["certificate"] = cert;
    return j;
}

CertificateReport report_from_json(const json& j) {
    CertificateReport r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    if (j.contains("question")) r.question = parse_question(j.at("question").get<std::string>());
    std::string st = j.at("status").get<std::string>();
    r.status = st == "yes" ? Status::Yes : st == "no" ? Status::No : Status::Unknown;
    const json& cert = j.at("certificate");
    std::string kd = cert.at("kind").get<std::string>();
    r.kind = kd == "theorem" ? CertKind::Theorem
             : kd == "witness" ? CertKind::Witness
                               : CertKind::BoundedVerification;
    if (cert.contains("theorem")) r.theorem = theorem_from_json(cert.at("theorem"));
    if (cert.contains("witnesses"))
        for (const auto& e : cert.at("witnesses")) r.witnesses.push_back(witness_from_json(e));
    if (cert.contains("verification"))
        r.verification = verification_from_json(cert.at("verification"));
    for (auto it = cert.begin(); it != cert.end(); ++it) {
        const std::string& k = it.key();
        if (k != "kind" && k != "theorem" && k != "witnesses" && k != "verification")
            r.extra[k] = it.value();
    }
    return r;
}

CertificateReport report_from_verdict(const std::string& command, json input, const Verdict& v) {
    CertificateReport r;
    r.command = command;
    r.input = std::move(input);
    r.question = v.question;
    r.status = v.status;
    r.kind = v.kind;
    r.theorem = v.theorem;
    if (v.witness) r.witnesses.push_back(*v.witness);
    return r;
}

} // namespace twist
