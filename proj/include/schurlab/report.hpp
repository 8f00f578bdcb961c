#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace schurlab {

// One verified statement: named check, its parameters, outcome, and the two
// sides in text form. discrepancy is the textual lhs - rhs where that makes
// sense, otherwise a short explanation of the failure.
struct check_result {
    std::string lemma;
    std::string parameter;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::string discrepancy;
    std::string note; // extra finding worth reporting even on success
};

inline bool all_passed(const std::vector<check_result>& checks)
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

inline std::string render_text(const std::string& command, const std::vector<check_result>& checks)
{
    std::string out = "command: " + command + "\n";
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out += "check " + c.lemma;
        if (!c.parameter.empty())
            out += ' ' + c.parameter;
        out += c.passed ? ": ok\n" : ": FAIL\n";
        if (!c.note.empty())
            out += "  note: " + c.note + "\n";
        if (c.passed) {
            ++passed;
        } else {
            if (!c.lhs.empty())
                out += "  lhs: " + c.lhs + "\n";
            if (!c.rhs.empty())
                out += "  rhs: " + c.rhs + "\n";
            if (!c.discrepancy.empty())
                out += "  discrepancy: " + c.discrepancy + "\n";
        }
    }
    out += "summary: " + std::to_string(checks.size()) + " checks, " + std::to_string(passed) +
           " passed, " + std::to_string(checks.size() - passed) + " failed\n";
    out += std::string("status: ") + (passed == checks.size() ? "PASS" : "FAIL") + "\n";
    return out;
}

inline std::string render_json(const std::string& command, const std::vector<check_result>& checks)
{
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["lemma"] = c.lemma;
        item["parameter"] = c.parameter;
        item["passed"] = c.passed;
        item["lhs"] = c.lhs;
        item["rhs"] = c.rhs;
        item["discrepancy"] = c.discrepancy;
        if (!c.note.empty())
            item["note"] = c.note;
        arr.push_back(std::move(item));
        if (c.passed)
            ++passed;
    }
    doc["checks"] = std::move(arr);
    doc["summary"] = {{"total", checks.size()},
                      {"passed", passed},
                      {"failed", checks.size() - passed}};
    doc["status"] = passed == checks.size() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

} // namespace schurlab
