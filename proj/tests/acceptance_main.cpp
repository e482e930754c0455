// Standalone acceptance runner: one pass/fail line per criterion,
// exit status 0 only when everything passes.
#include "l2euler/acceptance.hpp"

#include <cstdio>

int main()
{
    bool all = true;
    auto results = l2euler::run_acceptance([&](const l2euler::CriterionResult& r) {
        std::printf("%s  criterion %2d: %s (%.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.description.c_str(), r.ms, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    });
    std::printf("%zu criteria, %s\n", results.size(), all ? "all passed" : "FAILURES present");
    return all ? 0 : 1;
}
