#include "loewner/driver.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {

std::optional<double> Driver::slope_at(double t) const {
    if (!slope) return std::nullopt;
    const double eps = 1e-14 * std::max(1.0, horizon);
    if (slope_unbounded_start && t <= eps) return std::nullopt;
    if (slope_unbounded_end && t >= horizon - eps) return std::nullopt;
    return slope(t);
}

Driver zero_driver(double horizon) {
    Driver d;
    d.value = [](double) { return 0.0; };
    d.slope = [](double) { return 0.0; };
    d.horizon = horizon;
    d.label = "zero";
    return d;
}

Driver scale_driver(const Driver& d, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("scale_driver: r must be positive");
    Driver out;
    auto v = d.value;
    out.value = [v, r](double t) { return r * v(t / (r * r)); };
    if (d.slope) {
        auto s = d.slope;
        out.slope = [s, r](double t) { return s(t / (r * r)) / r; };
    }
    out.horizon = r * r * d.horizon;
    out.label = d.label;
    out.sqrt_start = d.sqrt_start;
    out.sqrt_end = d.sqrt_end;
    out.slope_unbounded_start = d.slope_unbounded_start;
    out.slope_unbounded_end = d.slope_unbounded_end;
    return out;
}

Driver reverse_driver(const Driver& d, double T) {
    if (!(T >= 0.0) || T > d.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("reverse_driver: T outside [0, horizon]");
    Driver out;
    auto v = d.value;
    const double vT = v(T);
    out.value = [v, T, vT](double t) { return v(T - t) - vT; };
    if (d.slope) {
        auto s = d.slope;
        out.slope = [s, T](double t) { return -s(T - t); };
    }
    out.horizon = T;
    out.label = d.label.empty() ? "reversed" : d.label + "_reversed";
    out.sqrt_start = d.sqrt_end;
    out.sqrt_end = d.sqrt_start;
    out.slope_unbounded_start = d.slope_unbounded_end;
    out.slope_unbounded_end = d.slope_unbounded_start;
    return out;
}

Driver reverse_driver(const Driver& d) { return reverse_driver(d, d.horizon); }

Driver restrict_driver(const Driver& d, double T) {
    if (!(T >= 0.0) || T > d.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("restrict_driver: T outside [0, horizon]");
    Driver out = d;
    out.horizon = T;
    out.sqrt_end = false;
    out.slope_unbounded_end = false;
    return out;
}

std::vector<std::pair<double, double>> sample_driver(const Driver& d, double T,
                                                     int n) {
    if (n < 1) throw std::invalid_argument("sample_driver: n must be >= 1");
    std::vector<std::pair<double, double>> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        double t = T * k / n;
        out.emplace_back(t, d.value(t));
    }
    return out;
}

}  // namespace loewner
