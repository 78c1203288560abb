#pragma once

#include <string>
#include <vector>

namespace mpsym {

// Grid controls shared by all suites. l = 0 means both levels 2 and 3;
// e = 0 lets each suite pick its default subgroup index.
struct VerifyOptions {
    int l = 0;
    int e = 0;
    long long max_n = 4;
    unsigned long long seed = 20260814ULL;
    int jobs = 0;  // 0 = hardware concurrency
};

struct VerifyReport {
    std::string suite;
    std::string grid;
    long long cases = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;  // findings of report-only suites
    double elapsed_sec = 0.0;
    bool report_only = false;
    bool passed() const { return report_only || counterexamples.empty(); }
};

const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace mpsym
