// Standalone run of the structural property checks.
// Usage: property_suite [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "properties.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 2024;
    bool all = true;
    for (const auto& r : props::run_all(props::default_algebras(), seed)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << '\n';
        all = all && r.passed;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
