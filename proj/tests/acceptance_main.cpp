#include <iostream>

#include "tightcx/acceptance.hpp"

int main() {
    int failed = 0;
    const auto results = tightcx::run_acceptance({}, &std::cout);
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
