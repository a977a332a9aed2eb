#pragma once

#include <string>
#include <vector>

namespace suspec::selfcheck {

struct Options {
    unsigned precision_bits = 256;
    long long prime_bound = 10000;
    unsigned long seed = 20240813;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs the twelve verification suites in order.
std::vector<CheckResult> run_all(const Options& opts = {});

} // namespace suspec::selfcheck
