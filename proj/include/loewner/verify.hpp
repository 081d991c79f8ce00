#pragma once

#include <string>
#include <vector>

namespace loewner {

/// One verification check. `pass` is authoritative; for most checks it means
/// residual <= tolerance, for order-of-convergence checks residual is the
/// measured order and must be >= tolerance (noted by `at_least`).
struct CheckResult {
    std::string check;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool at_least = false;
    bool pass = false;
};

/// Run the verification suite. Tolerances are scaled by tol_scale (> 1
/// loosens); `only` keeps checks whose name contains the given substring.
std::vector<CheckResult> run_acceptance(double tol_scale = 1.0,
                                        const std::string& only = "");

}  // namespace loewner
