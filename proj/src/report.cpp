#include "combpfaff/report.hpp"

#include <chrono>
#include <sstream>

namespace combpfaff {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["inputs"] = inputs;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["pass"] = pass;
    j["millis"] = millis;
    j["details"] = details;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.millis = j.at("millis").get<double>();
    r.details = j.at("details").get<std::vector<std::string>>();
    return r;
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << " " << theorem;
    if (!inputs.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [key, value] : inputs) {
            if (!first) out << ", ";
            out << key << "=" << value;
            first = false;
        }
        out << ")";
    }
    out << "\n  lhs: " << lhs << "\n  rhs: " << rhs;
    for (const auto& note : details) out << "\n  " << note;
    return out.str();
}

ReportTimer::ReportTimer()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double ReportTimer::elapsed_millis() const {
    long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now().time_since_epoch())
                        .count();
    return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace combpfaff
