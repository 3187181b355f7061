// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one line per criterion. Exit status 0 only if all pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "vqf/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    const auto results = vqf::run_verify_suite("all", seed);
    int idx = 0;
    int passed = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("[%s] %02d %-32s %s\n", r.pass ? "PASS" : "FAIL", idx, r.name.c_str(),
                    r.detail.c_str());
        if (r.pass) ++passed;
    }
    std::printf("%d/%d criteria passed (seed %llu)\n", passed, idx,
                static_cast<unsigned long long>(seed));
    return passed == idx ? 0 : 1;
}
