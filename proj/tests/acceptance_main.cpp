// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Run as `wmax_acceptance [--level quick|full] [--seed N]`;
// the ctest registration runs the full level.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "wmax/verify.hpp"

int main(int argc, char** argv) {
    wmax::VerifyLevel level = wmax::VerifyLevel::kFull;
    std::uint64_t seed = 42;

    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--level" && i + 1 < argc) {
            std::string value = argv[++i];
            if (value == "quick") {
                level = wmax::VerifyLevel::kQuick;
            } else if (value == "full") {
                level = wmax::VerifyLevel::kFull;
            } else {
                std::cerr << "unknown level " << value << '\n';
                return 1;
            }
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: wmax_acceptance [--level quick|full] [--seed N]\n";
            return 1;
        }
    }

    auto results = wmax::run_acceptance(level, seed);
    bool ok = wmax::report_acceptance(results, std::cout);
    return ok ? 0 : 1;
}
