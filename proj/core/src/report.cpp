#include "orbitspan/report.hpp"

#include <algorithm>

namespace orbitspan {

bool RunReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckLine& c) { return c.pass; });
}

void RunReport::add(std::string name, bool p, std::string detail) {
    checks.push_back(CheckLine{std::move(name), p, std::move(detail)});
}

std::string RunReport::render_text() const {
    std::string out = "== " + command + " ==\n";
    if (seed) out += "seed: " + std::to_string(*seed) + "\n";
    for (const CheckLine& c : checks) {
        out += (c.pass ? "  [pass] " : "  [FAIL] ") + c.name;
        if (!c.detail.empty()) out += " -- " + c.detail;
        out += "\n";
    }
    out += pass() ? "verdict: PASS\n" : "verdict: FAIL\n";
    if (witness_path) out += "witness: " + *witness_path + "\n";
    return out;
}

std::string RunReport::render_lines() const {
    std::string out = "RUN " + command + "\n";
    if (seed) out += "SEED " + std::to_string(*seed) + "\n";
    for (const CheckLine& c : checks) {
        out += "CHECK " + c.name + (c.pass ? " PASS" : " FAIL");
        if (!c.detail.empty()) out += " " + c.detail;
        out += "\n";
    }
    out += std::string("RESULT ") + (pass() ? "PASS" : "FAIL") + "\n";
    if (witness_path) out += "WITNESS " + *witness_path + "\n";
    return out;
}

} // namespace orbitspan
