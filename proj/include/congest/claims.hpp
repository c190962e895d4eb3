#pragma once

#include <string>
#include <vector>

namespace congest {

// One checked inequality from the cost/correctness analysis, evaluated exactly
// on the run's actual data. `applicable` is false when the preconditions of
// the inequality did not hold (the check is then vacuous).
struct ClaimCheck {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool pass = true;
    bool applicable = true;
    std::string note;
};

struct ClaimsReport {
    std::vector<ClaimCheck> checks;

    void add(std::string name, double lhs, double rhs, bool pass, bool applicable = true,
             std::string note = "") {
        checks.push_back({std::move(name), lhs, rhs, pass, applicable, std::move(note)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
    std::string to_csv() const {
        std::string out = "claim,lhs,rhs,applicable,pass\n";
        for (const auto& c : checks) {
            out += "\"" + c.name + "\"," + std::to_string(c.lhs) + "," + std::to_string(c.rhs) +
                   "," + (c.applicable ? "1" : "0") + "," + (c.pass ? "pass" : "FAIL") + "\n";
        }
        return out;
    }
};

} // namespace congest
