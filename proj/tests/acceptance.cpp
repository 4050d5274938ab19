// Verification suite entry point: one line per criterion, nonzero exit on
// any failure. The same checks back `hecke verify`.

#include <iostream>

#include "hecke/verify.hpp"

int main() {
    auto results = hecke::run_acceptance(std::cout);
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return hecke::all_passed(results) ? 0 : 1;
}
