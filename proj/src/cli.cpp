#include "twistcert/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "twistcert/certificates.hpp"
#include "twistcert/errors.hpp"
#include "twistcert/oracle.hpp"
#include "twistcert/report.hpp"

namespace twist {

namespace {

using nlohmann::json;

std::vector<long long> parse_int_list(const std::string& s, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::logic_error&) {
            throw invalid_input(std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw invalid_input(std::string(what) + ": empty list");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
    return out;
}

PingPongParams build_params(const CurveSystem& A, const std::string& mu_arg,
                            const std::string& lambda_arg) {
    PingPongParams P = mu_arg.empty()
                           ? PingPongParams::uniform(A.h)
                           : PingPongParams::from_mu_upper(A.h, parse_rat_list(mu_arg));
    if (lambda_arg.empty() || lambda_arg == "none") return P;
    if (lambda_arg == "auto") return PingPongParams::from_filling(A, P.mu);
    if (lambda_arg == "triangle") return PingPongParams::triangle(A, P.mu);
    return P.with_lambda_const(Rat::parse(lambda_arg));
}

void emit(const CertificateReport& rep, const std::string& json_path, std::ostream& out) {
    if (!json_path.empty()) {
        json j = to_json(rep);
        if (json_path == "-") {
            out << j.dump(2) << "\n";
            return;
        }
        std::ofstream f(json_path);
        if (!f) throw invalid_input("cannot write " + json_path);
        f << j.dump(2) << "\n";
    }
    if (rep.question) out << question_str(*rep.question) << ": ";
    out << status_str(rep.status) << "  [" << kind_str(rep.kind) << "]\n";
    if (rep.theorem) {
        out << "  criterion: " << rep.theorem->tag << "\n";
        for (const auto& [k, v] : rep.theorem->checked) out << "    " << k << " = " << v << "\n";
    }
    for (const auto& w : rep.witnesses) {
        out << "  witness: " << w.word.str();
        if (w.equals) out << "  =  " << w.equals->str();
        out << "   matrix " << w.matrix.str();
        if (w.fixes.kind == FixedSlopes::Kind::One) out << "  fixes " << w.fixes.slope.str();
        if (w.fixes.kind == FixedSlopes::Kind::All) out << "  fixes every slope";
        out << "\n";
    }
    if (rep.verification) {
        const auto& v = *rep.verification;
        out << "  verification: " << (v.pass ? "pass" : "FAIL") << "  (height " << v.height
            << ", power bound " << v.power_bound << ", n0 " << v.n0 << ", "
            << v.move_violations.size() << " move / " << v.word_violations.size()
            << " word violations, " << v.uncovered.size() << " uncovered)\n";
    }
}

// Torus realization used for two-twist cross-checks.
std::vector<Slope> pair_realization(long long m) {
    if (m == 0) return {Slope{1, 0}, Slope{1, 0}};
    return {Slope{1, 0}, make_slope(1, m)};
}

int cmd_classify2(long long m, long long n1, long long n2, const std::string& question,
                  bool cross_check, const std::string& json_path, std::ostream& out) {
    Question q = parse_question(question);
    Verdict v = q == Question::Freeness ? classify_free_2(m, n1, n2)
                                        : classify_relpa_2(m, n1, n2);
    if (cross_check && q == Question::Freeness && v.status == Status::Yes) {
        auto rels = find_relations(pair_realization(m), {n1, n2}, 6, 2, 1);
        if (!rels.empty())
            throw inconsistency("certified free but the search found the relation " +
                                rels[0].str());
    }
    CertificateReport rep = report_from_verdict(
        "classify2", json{{"m", m}, {"n1", n1}, {"n2", n2}}, v);
    emit(rep, json_path, out);
    return 0;
}

int cmd_torus_triple(const std::string& exponents, const std::string& question,
                     bool cross_check, const std::string& json_path, std::ostream& out) {
    auto n = parse_int_list(exponents, "--exponents");
    if (n.size() != 3) throw invalid_input("--exponents: expected three values");
    Question q = parse_question(question);
    Verdict v = q == Question::Freeness ? torus_triple_free(n[0], n[1], n[2])
                                        : torus_triple_relpa(n[0], n[1], n[2]);
    if (cross_check && v.status == Status::Yes) {
        CurveSystem A = unit_triple();
        if (q == Question::Freeness) {
            auto rels = find_relations(*A.torus_slopes, n, 6, 2, 1);
            if (!rels.empty())
                throw inconsistency("certified free but the search found the relation " +
                                    rels[0].str());
        } else {
            auto red = find_reducibles(*A.torus_slopes, n, 4, 2);
            if (!red.empty())
                throw inconsistency("certified relatively pseudo-Anosov but " +
                                    red[0].word.str() + " is reducible");
        }
    }
    CertificateReport rep =
        report_from_verdict("torus-triple", json{{"exponents", n}}, v);
    emit(rep, json_path, out);
    return 0;
}

int cmd_bounds(const std::string& input, const std::string& mu_arg,
               const std::string& lambda_arg, const std::string& theorem,
               const std::string& json_path, std::ostream& out) {
    CurveSystem A = load_curve_system_file(input);
    CertificateReport rep;
    rep.command = "bounds";
    rep.input = json{{"file", input}, {"system", curve_system_to_json(A)},
                     {"theorem", theorem}};

    if (theorem == "32") {
        Verdict v = unit_exponent_free_check(A);
        rep = report_from_verdict("bounds", rep.input, v);
    } else if (theorem == "33") {
        UniformExponent u = uniform_free_exponent(A);
        rep = report_from_verdict("bounds", rep.input, u.verdict);
        rep.extra["uniform_exponent"] = u.n;
    } else if (theorem == "36") {
        UniformExponent u = uniform_relpa_exponent(A);
        rep = report_from_verdict("bounds", rep.input, u.verdict);
        rep.extra["uniform_exponent"] = u.n;
    } else if (theorem == "lemma31") {
        PingPongParams P = build_params(A, mu_arg, lambda_arg.empty() ? "auto" : lambda_arg);
        rep.question = Question::Freeness;
        rep.status = Status::Yes;
        rep.kind = CertKind::Theorem;
        TheoremCert cert{"twist-region-exponent-bound", {}};
        json table = json::array();
        for (int i = 0; i < A.h; ++i) {
            ExponentBound b = region_move_bound(i, A, P);
            json row{{"generator", i + 1},
                     {"move_bound", b.bound.str()},
                     {"min_exponent", b.min_exponent}};
            cert.checked.emplace_back("bound_n" + std::to_string(i + 1), b.bound.str());
            try {
                Rat g(0);
                for (int j = 0; j < A.h; ++j)
                    if (j != i) g = rat_max(g, norm_growth_bound(i, j, A, P));
                row["norm_growth_bound"] = g.str();
            } catch (const not_applicable&) {
            }
            table.push_back(row);
        }
        rep.theorem = cert;
        rep.extra["bounds"] = table;
    } else {
        throw invalid_input("--theorem: expected 32, 33, 36 or lemma31");
    }
    emit(rep, json_path, out);
    return 0;
}

int cmd_search(const std::string& input, const std::string& exponents, const std::string& mode,
               int max_syllables, long long max_step, const std::string& json_path,
               std::ostream& out) {
    CurveSystem A = load_curve_system_file(input);
    if (!A.torus_slopes) throw invalid_input("search needs torus_slopes in the input");
    auto n = parse_int_list(exponents, "--exponents");
    if ((int)n.size() != A.h) throw invalid_input("--exponents: expected one value per curve");
    for (long long e : n)
        if (e < 1) throw invalid_input("--exponents: exponents must be positive");

    CertificateReport rep;
    rep.command = "search";
    rep.input = json{{"file", input}, {"system", curve_system_to_json(A)}, {"exponents", n}};
    rep.extra["max_syllables"] = max_syllables;
    rep.extra["max_step"] = max_step;

    if (mode == "relations") {
        rep.question = Question::Freeness;
        auto rels = find_relations(*A.torus_slopes, n, max_syllables, max_step);
        for (const Word& w : rels) {
            WitnessCert wc;
            wc.word = w;
            wc.curves = *A.torus_slopes;
            wc.exponents = n;
            wc.matrix = kIdentity;
            wc.fixes = fixed_slope(kIdentity);
            check_witness(wc);
            rep.witnesses.push_back(std::move(wc));
        }
        rep.status = rels.empty() ? Status::Unknown : Status::No;
        rep.kind = rels.empty() ? CertKind::BoundedVerification : CertKind::Witness;
    } else if (mode == "reducibles") {
        rep.question = Question::RelativePA;
        auto hits = find_reducibles(*A.torus_slopes, n, max_syllables, max_step);
        bool nontrivial = false;
        for (const auto& h : hits) {
            WitnessCert wc;
            wc.word = h.word;
            wc.curves = *A.torus_slopes;
            wc.exponents = n;
            wc.matrix = h.matrix;
            wc.fixes = h.fixes;
            check_witness(wc);
            if (h.matrix != kIdentity) nontrivial = true;
            rep.witnesses.push_back(std::move(wc));
        }
        // A word evaluating to +I is a relation, not a reducibility
        // witness; only -I or parabolic words refute relative pA here.
        rep.status = nontrivial ? Status::No : Status::Unknown;
        rep.kind = nontrivial ? CertKind::Witness : CertKind::BoundedVerification;
    } else {
        throw invalid_input("--mode: expected relations or reducibles");
    }
    rep.extra["found"] = rep.witnesses.size();
    emit(rep, json_path, out);
    return 0;
}

int cmd_verify(const std::string& input, const std::string& exponents, const std::string& mode,
               long long height, int n0, long long power_bound, const std::string& mu_arg,
               const std::string& lambda_arg, const std::string& json_path, std::ostream& out) {
    CurveSystem A = load_curve_system_file(input);
    if (!A.torus_slopes) throw invalid_input("verification needs torus_slopes in the input");
    auto n = parse_int_list(exponents, "--exponents");
    if ((int)n.size() != A.h) throw invalid_input("--exponents: expected one value per curve");

    PingPongParams P = build_params(A, mu_arg, lambda_arg);
    VerifyOptions opt;
    opt.height = height;
    opt.n0 = n0;
    opt.power_bound = power_bound;
    PingPongMode m = parse_mode(mode);
    VerificationReport vr = verify_ping_pong(A, n, P, m, opt);

    CertificateReport rep;
    rep.command = "verify";
    rep.input = json{{"file", input}, {"system", curve_system_to_json(A)}, {"exponents", n},
                     {"mode", mode}};
    rep.question = m == PingPongMode::Strict ? Question::Freeness : Question::RelativePA;
    rep.status = Status::Unknown; // bounded evidence, never a proof
    rep.kind = CertKind::BoundedVerification;
    rep.verification = vr;
    emit(rep, json_path, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certificates for groups generated by powers of Dehn twists"};
    app.require_subcommand(1);

    // classify2
    long long m = 0, n1 = 1, n2 = 1;
    std::string question = "free", json_path;
    bool cross_check = false;
    auto* c2 = app.add_subcommand("classify2", "classify a two-twist group");
    c2->add_option("--m", m, "intersection number of the two curves")->required();
    c2->add_option("--n1", n1, "exponent of the first twist")->required();
    c2->add_option("--n2", n2, "exponent of the second twist")->required();
    c2->add_option("--question", question, "free or relpa")->required();
    c2->add_flag("--cross-check", cross_check, "confirm the verdict with the word search");
    c2->add_option("--json", json_path, "write the report as JSON (- for stdout)");

    // bounds
    std::string input, mu_arg, lambda_arg, theorem = "lemma31";
    auto* bd = app.add_subcommand("bounds", "exponent bounds and closed-form criteria");
    bd->add_option("--input", input, "curve system JSON file")->required();
    bd->add_option("--mu", mu_arg, "upper-triangle mu entries, e.g. 1,1/2,2");
    bd->add_option("--lambda", lambda_arg,
                   "auto (pairwise filling), triangle, none, or a rational");
    bd->add_option("--theorem", theorem, "32, 33, 36 or lemma31");
    bd->add_option("--json", json_path, "write the report as JSON");

    // torus-triple
    std::string exponents;
    auto* tt = app.add_subcommand("torus-triple", "the three standard torus twists");
    tt->add_option("--exponents", exponents, "three exponents, e.g. 3,3,3")->required();
    tt->add_option("--question", question, "free or relpa")->required();
    tt->add_flag("--cross-check", cross_check, "confirm the verdict with the word search");
    tt->add_option("--json", json_path, "write the report as JSON");

    // search
    std::string mode;
    int max_syllables = 6;
    long long max_step = 3;
    auto* se = app.add_subcommand("search", "brute-force relation/reducible search");
    se->add_option("--input", input, "curve system JSON file")->required();
    se->add_option("--exponents", exponents, "one exponent per curve")->required();
    se->add_option("--mode", mode, "relations or reducibles")->required();
    se->add_option("--max-syllables", max_syllables, "syllable bound (default 6)");
    se->add_option("--max-step", max_step, "syllable exponent bound (default 3)");
    se->add_option("--json", json_path, "write the report as JSON");

    // verify
    long long height = 20, power_bound = 5;
    int n0 = 1;
    auto* ve = app.add_subcommand("verify", "bounded ping-pong verification");
    ve->add_option("--input", input, "curve system JSON file")->required();
    ve->add_option("--exponents", exponents, "one exponent per curve")->required();
    ve->add_option("--mode", mode, "ppl, ppwtc or wpp")->required();
    ve->add_option("--height", height, "slope height bound (default 20)");
    ve->add_option("--n0", n0, "word depth for exceptional absorption (default 1)");
    ve->add_option("--power-bound", power_bound, "generator power bound (default 5)");
    ve->add_option("--mu", mu_arg, "upper-triangle mu entries");
    ve->add_option("--lambda", lambda_arg, "auto, triangle, none, or a rational");
    ve->add_option("--json", json_path, "write the report as JSON");

    std::vector<const char*> argv;
    argv.push_back("twistcert");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c2->parsed()) return cmd_classify2(m, n1, n2, question, cross_check, json_path, out);
        if (bd->parsed()) return cmd_bounds(input, mu_arg, lambda_arg, theorem, json_path, out);
        if (tt->parsed())
            return cmd_torus_triple(exponents, question, cross_check, json_path, out);
        if (se->parsed())
            return cmd_search(input, exponents, mode, max_syllables, max_step, json_path, out);
        if (ve->parsed())
            return cmd_verify(input, exponents, mode, height, n0, power_bound, mu_arg,
                              lambda_arg, json_path, out);
    } catch (const inconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace twist
