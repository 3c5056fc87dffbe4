#pragma once

// Identity suites behind `supermac verify` and the acceptance runner.  Every
// failure carries a machine-readable counterexample.

#include <string>
#include <vector>

#include <json.hpp>

namespace supermac {

struct VerifyItem {
    std::string name;
    enum class Status { pass, fail, skipped } status = Status::pass;
    bool conjectural = false;
    std::string reason;  // skip reason or failure detail
    // counterexample payload (present on failure)
    std::string op_label;
    std::string input;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyItem> items;

    bool ok() const;
    nlohmann::json to_json() const;
    std::string summary() const;
};

struct VerifyOptions {
    int max_level2 = 8;        // fixture/eigenvalue depth
    int window_level2 = 6;     // operator-identity window
    unsigned seed = 20240916;  // randomized property checks
};

// suite in {fixtures, anticommutators, commutativity, conjecture6,
// pieri-cross, tq, finite-n, characters, all}.
VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt = {});

std::vector<std::string> verify_suite_names();

}  // namespace supermac
