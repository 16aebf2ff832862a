// Runs every acceptance check and prints one line per check.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "orlov/checks.hpp"

int main(int argc, char** argv) {
    orlov::CheckOptions opt;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "-v")) verbose = true;
        else if (!std::strcmp(argv[i], "--a6")) opt.include_a6 = true;
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
    }
    std::cout << "seed " << opt.seed << std::endl;
    int failed = 0;
    for (int id = 1; id <= orlov::kNumChecks; ++id) {
        const auto c = orlov::run_check(id, opt);
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << id << "  " << c.title << std::endl;
        if (verbose || !c.pass)
            for (auto& d : c.details) std::cout << "        " << d << "\n";
        failed += !c.pass;
    }
    std::cout << (orlov::kNumChecks - failed) << "/" << orlov::kNumChecks << " passed" << std::endl;
    return failed ? 1 : 0;
}
