#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

// Suite configuration and check reports.  A report is a flat list of named
// pass/fail results with optional witnesses; serialization lives in json_io.hpp
// and keeps the output canonical (checks sorted by name, no timing data).

namespace fincat {

struct SuiteConfig {
    int trunc_n = 2;             // truncation bound N for the base category
    int q_max = 2;               // maximum tuple length
    int degree = 3;              // maximum simplicial degree for nerves / classification
    std::uint64_t seed = 0;      // master seed for randomized sweeps
    int random_count = 100;      // randomized diagrams per sweep
    long long budget = 1'000'000;  // candidate budget for brute-force enumerations
    int stability_margin = 0;    // extra truncation margin for the stability diagnostic

    friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    bool skipped = false;  // ran out of desk-scale room; never counts as a pass
    std::string witness;
};

struct CheckReport {
    SuiteConfig config;
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back(CheckResult{std::move(name), pass, false, std::move(witness)});
    }
    void skip(std::string name, std::string why) {
        checks.push_back(CheckResult{std::move(name), false, true, std::move(why)});
    }
    void sort_by_name() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass && !c.skipped) ++n;
        return n;
    }
    int skips() const {
        int n = 0;
        for (const auto& c : checks)
            if (c.skipped) ++n;
        return n;
    }
};

}  // namespace fincat
