// Runs the acceptance criteria and prints one line per criterion.
#include "trispec/validation.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& check : trispec::run_acceptance_suite()) {
        std::printf("%s %s  %s  (%.2f s)  %s\n", check.passed ? "PASS" : "FAIL", check.id.c_str(),
                    check.title.c_str(), check.seconds, check.detail.c_str());
        failed += check.passed ? 0 : 1;
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
