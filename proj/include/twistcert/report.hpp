#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistcert/certificates.hpp"
#include "twistcert/curve_system.hpp"
#include "twistcert/pingpong.hpp"

namespace twist {

inline constexpr const char* kToolName = "twistcert";
inline constexpr const char* kToolVersion = "0.1.0";

// Curve-system file format:
//   {
//     "h": 3,
//     "intersection": [[0,1,1],[1,0,1],[1,1,0]],
//     "torus_slopes": [[1,0],[0,1],[1,1]],   // optional
//     "punctured": false,                      // default false
//     "pairwise_filling": true                 // default: derived from slopes
//   }
// Violations are reported with the offending field in the message.
CurveSystem load_curve_system(const nlohmann::json& j);
CurveSystem load_curve_system_file(const std::string& path);
nlohmann::json curve_system_to_json(const CurveSystem& A);

std::string question_str(Question q);
std::string status_str(Status s);
std::string kind_str(CertKind k);
std::string mode_str(PingPongMode m);
Question parse_question(const std::string& s);   // "free" | "relpa"
PingPongMode parse_mode(const std::string& s);   // "ppl" | "ppwtc" | "wpp"

nlohmann::json to_json(Slope s);
nlohmann::json to_json(const Mat2& m);
nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const FixedSlopes& f);
nlohmann::json to_json(const TheoremCert& t);
nlohmann::json to_json(const WitnessCert& w);
nlohmann::json to_json(const VerificationReport& r);

Slope slope_from_json(const nlohmann::json& j);
Word word_from_json(const nlohmann::json& j);
Mat2 mat_from_json(const nlohmann::json& j);
FixedSlopes fixes_from_json(const nlohmann::json& j);
TheoremCert theorem_from_json(const nlohmann::json& j);
WitnessCert witness_from_json(const nlohmann::json& j);
VerificationReport verification_from_json(const nlohmann::json& j);

// The machine-readable output of every subcommand. Serializes losslessly:
// parsing the emitted JSON reproduces the report, and emission is
// byte-deterministic for a fixed input and tool version.
struct CertificateReport {
    std::string command;
    nlohmann::json input = nlohmann::json::object();
    std::optional<Question> question;
    Status status = Status::Unknown;
    CertKind kind = CertKind::Theorem;
    std::optional<TheoremCert> theorem;
    std::vector<WitnessCert> witnesses;
    std::optional<VerificationReport> verification;
    nlohmann::json extra = nlohmann::json::object();

    friend bool operator==(const CertificateReport& a, const CertificateReport& b);
};

nlohmann::json to_json(const CertificateReport& r);
CertificateReport report_from_json(const nlohmann::json& j);

CertificateReport report_from_verdict(const std::string& command, nlohmann::json input,
                                      const Verdict& v);

} // namespace twist
