// Acceptance runner: executes the full verification suite and prints one
// pass/fail line per criterion. Exit code 0 iff every criterion passes.
#include <cstdio>

#include "crossfam/suite.hpp"

int main() {
    crossfam::SuiteResult res = crossfam::run_suite({});
    for (const crossfam::Check& c : res.checks)
        std::printf("%s %s: %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    return res.pass() ? 0 : 1;
}
