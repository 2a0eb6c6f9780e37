// One line per acceptance criterion; exit status is nonzero if any fails.

#include <cstdio>

#include "harmonic/selftest.hpp"

int main() {
    using namespace harmonic::selftest;
    int failed = 0;
    for (const auto& check : acceptance_checks()) {
        const auto r = run_check(check);
        std::printf("%s criterion %s: %s [%.2f s]\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                    r.seconds);
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(acceptance_checks().size()) - failed,
                acceptance_checks().size());
    return failed == 0 ? 0 : 1;
}
