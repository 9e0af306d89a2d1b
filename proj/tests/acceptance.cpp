// Acceptance suite: runs every criterion and prints one pass/fail line per
// criterion. Exit code 0 only when all criteria pass.

#include <cstdlib>
#include <iostream>

#include "aztec/verify.hpp"

int main() {
    long cap = 12;
    if (const char* env = std::getenv("AZTEC_ORACLE_CAP")) cap = std::atol(env);
    std::vector<aztec::Check> checks = aztec::acceptance_checks(cap);
    int failed = 0;
    for (const aztec::Check& c : checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
