// Verification suite runner: one pass/fail line per criterion, nonzero exit
// status when any criterion fails.
#include <cstdio>

#include "loewner/io.hpp"
#include "loewner/verify.hpp"

int main() {
    const auto results = loewner::run_acceptance();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s  %-36s [%s]  residual=%s %s %s\n",
                    r.pass ? "PASS" : "FAIL", r.check.c_str(), r.params.c_str(),
                    loewner::format_double(r.residual).c_str(),
                    r.at_least ? ">=" : "<=",
                    loewner::format_double(r.tolerance).c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
