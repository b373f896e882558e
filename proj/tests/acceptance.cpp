// Acceptance gate: runs the full verification battery and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include "fock/battery.hpp"

#include <cstdio>

int main() {
    std::vector<fock::CheckResult> results = fock::run_battery();
    size_t passed = 0;
    for (const fock::CheckResult& r : results) {
        if (r.pass) ++passed;
        std::printf("[%s] %-22s (%6.1f s)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
    }
    std::printf("%s: %zu/%zu criteria passed\n",
                passed == results.size() ? "ACCEPTED" : "REJECTED", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
