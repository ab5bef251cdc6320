// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "superalg/selftest.hpp"

int main() {
    auto results = superalg::selftest::run_acceptance();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        all_pass &= r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
