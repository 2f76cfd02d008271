#pragma once

#include <string>
#include <vector>

#include "wlil/weights.hpp"

namespace wlil {

enum class CaseId { ExpHalfline, SqrtWeight, HermiteLine, MarkovFailure };

const char* case_name(CaseId id);
bool parse_case_name(const std::string& s, CaseId& out);

// One named numeric check: |got - want| <= tol, or a plain predicate when
// tol < 0 (want then encodes the expected truth value).
struct Assertion {
    std::string name;
    double got = 0.0;
    double want = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

struct CaseOutcome {
    CaseId id = CaseId::ExpHalfline;
    std::vector<Assertion> checks;

    // Sampled curves behind the case's picture: first column is t.
    std::vector<std::string> curve_columns;
    std::vector<std::vector<double>> curve_rows;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs one of the four fixed demonstration cases end to end. Inputs are baked
// in; every numbered claim becomes an Assertion with its tolerance.
CaseOutcome run_case(CaseId id);

}  // namespace wlil
