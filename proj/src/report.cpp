#include "flipstiefel/report.hpp"

#include <ostream>

namespace flipstiefel {

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["provenance"] = provenance;
    return j;
}

Report Report::from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    return r;
}

VerifySummary run_checks(const std::vector<RegressionCheck>& checks, std::ostream& out,
                         bool use_color) {
    const char* green = use_color ? "\x1b[32m" : "";
    const char* red = use_color ? "\x1b[31m" : "";
    const char* reset = use_color ? "\x1b[0m" : "";

    VerifySummary summary;
    summary.total = static_cast<int>(checks.size());
    for (const auto& check : checks) {
        bool ok = false;
        try {
            ok = check.run();
        } catch (const std::exception& e) {
            out << red << "[FAIL]" << reset << " " << check.anchor << " (exception: " << e.what()
                << ")\n";
            summary.failed_anchors.push_back(check.anchor);
            continue;
        }
        if (ok) {
            ++summary.passed;
            out << green << "[ ok ]" << reset << " " << check.anchor << "\n";
        } else {
            out << red << "[FAIL]" << reset << " " << check.anchor << "\n";
            summary.failed_anchors.push_back(check.anchor);
        }
    }
    out << summary.passed << "/" << summary.total << " checks passed\n";
    return summary;
}

}  // namespace flipstiefel
