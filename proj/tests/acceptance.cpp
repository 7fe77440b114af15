// Acceptance suite: one line per check, nonzero exit if anything fails.

#include <cstdio>

#include "treecode/selfcheck.hpp"

int main() {
    bool all_pass = true;
    for (const treecode::CheckResult& r : treecode::run_acceptance_checks()) {
        std::printf("[%s] %-20s %6.2fs (budget %.0fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                    r.budget_seconds, r.title.c_str());
        if (!r.pass) std::printf("        %s\n", r.detail.c_str());
        all_pass &= r.pass;
    }
    return all_pass ? 0 : 1;
}
