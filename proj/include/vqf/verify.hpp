#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vqf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs one of the identity suites: fueter, operators, ck, kernel, blaschke,
/// rational, or all. Every check is deterministic for a fixed seed, and every
/// tolerance is pinned in the implementation.
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed = 0);

const std::vector<std::string>& verify_suite_names();

}  // namespace vqf
