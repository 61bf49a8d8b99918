#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "neighborly/betti.hpp"

namespace neighborly {

struct VerifyConfig {
    long long field_char = 0;
    EngineCaps caps;
    bool strict = false;
    unsigned long long seed = 0;
    bool timing = false;  // off by default so reports are byte-identical
};

struct CheckRun {
    int n = 0;
    std::string check;
    nlohmann::json formula;
    nlohmann::json recursion;  // null when the check has no recursion route
    nlohmann::json engine;     // null when skipped, "indeterminate" on cap hit
    std::string verdict;       // pass | fail | indeterminate
    long long elapsed_ms = 0;
};

struct VerificationReport {
    std::vector<CheckRun> runs;
    long long pass = 0;
    long long fail = 0;
    long long indeterminate = 0;
    nlohmann::json config;

    bool ok(bool strict) const { return fail == 0 && (!strict || indeterminate == 0); }
};

struct CheckInfo {
    std::string name;
    int min_n;
    int default_from;
    int default_to;
};

const std::vector<CheckInfo>& check_registry();

// runs each requested check over [from, to] (per-check defaults when unset),
// deterministically ordered by (n, check)
VerificationReport verify(std::optional<int> from, std::optional<int> to,
                          const std::vector<std::string>& checks, const VerifyConfig& config);

CheckRun run_check(const std::string& check, int n, const VerifyConfig& config);

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string report_to_markdown(const VerificationReport& report);

}  // namespace neighborly
