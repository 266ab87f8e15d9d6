// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cstdio>

#include "sjack/verify.hpp"

int main() {
    bool all = true;
    int k = 0;
    for (const auto& [name, fn] : sjack::verification_suites()) {
        sjack::CheckResult res = fn();
        all = all && res.pass;
        std::printf("[%s] %d. %s (%.1fs) %s\n", res.pass ? "PASS" : "FAIL", ++k,
                    res.name.c_str(), res.seconds, res.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
