#pragma once

#include <string>
#include <vector>

namespace eistheta {

// One checked instance inside a suite. pass means expected == actual as
// strings of exact values; there is no tolerance anywhere. flag is empty
// except on cells of the stored reference tables that are known to disagree
// with exact recomputation, which carry "reference_discrepancy".
struct SuiteCase {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string flag;
};

struct SuiteReport {
    std::string suite;
    long long passed = 0;
    long long failed = 0;
    std::vector<SuiteCase> cases;
};

struct VerifyConfig {
    long long bound = 200;  // prime-sweep ceiling (r13-prime, tables)
    int workers = 1;        // case-level parallelism; the report is
                            // bit-for-bit identical for every worker count
};

// Canonical suite names in registry order.
const std::vector<std::string>& suite_registry();

// Resolves a selection: a canonical name stays itself, "appendix" expands
// to the four appendix suites, "all" to the whole registry. Throws
// std::invalid_argument for anything else.
std::vector<std::string> resolve_suites(const std::string& selection);

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg = {});

// {"suite": ..., "tolerance": 0, "passed": n, "failed": m, "cases": [...]};
// keys in that order, reproducible byte-for-byte.
std::string to_json_string(const SuiteReport& report);

}  // namespace eistheta
