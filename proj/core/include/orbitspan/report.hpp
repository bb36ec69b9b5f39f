#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitspan {

/// One named check inside a run: verdict plus a witness or counterexample
/// description when it failed.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    std::vector<CheckLine> checks;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> witness_path;

    bool pass() const;
    void add(std::string name, bool pass, std::string detail = "");

    /// Human-readable table.
    std::string render_text() const;
    /// Machine-readable: one line per check, stable field order.
    std::string render_lines() const;
    /// 0 when every check passed, 1 otherwise.
    int exit_code() const { return pass() ? 0 : 1; }
};

} // namespace orbitspan
