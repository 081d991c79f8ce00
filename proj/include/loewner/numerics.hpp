#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace loewner {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per n by Newton iteration and cached.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

/// Integrate f over [a, b] with a composite Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int nodes = 32);

/// Find x in [lo, hi] with f(x) = 0 by bisection. f(lo) and f(hi) must have
/// opposite signs. Runs until the bracket width drops below xtol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-15, int max_iter = 200);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Run body(i) for i in [0, n). Work is split across threads but results must
/// be written to disjoint slots, so the outcome is identical to a serial run.
/// Thread count is capped by the LOEWNER_LAB_THREADS environment variable.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace loewner
