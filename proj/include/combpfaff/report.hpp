#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace combpfaff {

// Outcome of one theorem verification. Both sides are canonical strings
// (sorted monomials), so reports are byte-stable across runs.
struct VerificationReport {
    std::string theorem;
    std::map<std::string, std::string> inputs;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    double millis = 0.0;
    std::vector<std::string> details;

    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);
    std::string text() const;
};

// Helper that fills in timing around a check body.
class ReportTimer {
public:
    ReportTimer();
    double elapsed_millis() const;

private:
    long long start_ns_;
};

}  // namespace combpfaff
