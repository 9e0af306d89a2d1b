#pragma once

#include <string>
#include <vector>

namespace aztec {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Verification suites runnable from the CLI: "kravchuk", "placement",
/// "oracle", "shuffle", "holes", "acceptance", or "all". Each check is one
/// named identity from the module contracts; `oracle_cap` bounds the sizes
/// handed to the brute-force counter.
std::vector<Check> run_suite(const std::string& suite, long oracle_cap = 12);

bool all_passed(const std::vector<Check>& checks);

/// The twelve acceptance criteria, in order.
std::vector<Check> acceptance_checks(long oracle_cap = 12);

}  // namespace aztec
