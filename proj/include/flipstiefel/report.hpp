#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace flipstiefel {

using json = nlohmann::json;

/// Machine-readable result of one CLI invocation. nlohmann::json keeps
/// object keys sorted, so dump() is deterministic for fixed contents.
struct Report {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<std::string> provenance;

    json to_json() const;
    static Report from_json(const json& j);

    bool operator==(const Report&) const = default;
};

/// One named regression check; `run` returns true on agreement.
struct RegressionCheck {
    std::string anchor;
    std::function<bool()> run;
};

/// The full battery behind `verify-paper`: closed-form truncation
/// exponents, index anchors, the 16-row residue table, the
/// (non-)parallelizability and span case lists, obstruction verdicts, the
/// coincidence-threshold formulas, and spectral crosschecks up to n = 10.
std::vector<RegressionCheck> regression_checks();

struct VerifySummary {
    int total = 0;
    int passed = 0;
    std::vector<std::string> failed_anchors;

    bool all_passed() const noexcept { return passed == total; }
};

/// Runs every check, printing one line per check to `out`.
VerifySummary run_checks(const std::vector<RegressionCheck>& checks, std::ostream& out,
                         bool use_color);

}  // namespace flipstiefel
