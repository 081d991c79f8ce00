#include "loewner/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "loewner/driver_library.hpp"
#include "loewner/io.hpp"
#include "loewner/numerics.hpp"

namespace loewner {

namespace {

const char* method_name(EnergyMethod m) {
    switch (m) {
        case EnergyMethod::partition: return "partition";
        case EnergyMethod::quadrature: return "quadrature";
        case EnergyMethod::analytic: return "analytic";
    }
    return "?";
}

constexpr double kInfinityThreshold = 1e6;

double partition_sum(const Driver& d, const std::vector<double>& pts) {
    double acc = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) {
        const double dt = pts[i] - pts[i - 1];
        if (!(dt > 0)) throw std::invalid_argument("partition must be increasing");
        const double dl = d.value(pts[i]) - d.value(pts[i - 1]);
        acc += dl * dl / (2.0 * dt);
        if (acc > kInfinityThreshold) return std::numeric_limits<double>::infinity();
    }
    return acc;
}

}  // namespace

std::string EnergyReport::to_json() const {
    std::string out = "{\"value\": ";
    out += std::isfinite(value) ? format_double(value) : "\"inf\"";
    out += ", \"method\": \"";
    out += method_name(method);
    out += "\", \"n\": " + std::to_string(n);
    out += ", \"error_estimate\": " + format_double(error_estimate);
    if (fallback_warning) out += ", \"warning\": \"no closed-form derivative\"";
    out += "}";
    return out;
}

EnergyReport energy_partition(const Driver& d, double T,
                              const std::vector<double>& partition) {
    if (partition.size() < 2 || partition.front() != 0.0 ||
        std::abs(partition.back() - T) > 1e-12 * std::max(1.0, T))
        throw std::invalid_argument("energy_partition: partition must span [0, T]");
    EnergyReport rep;
    rep.method = EnergyMethod::partition;
    rep.n = static_cast<int>(partition.size()) - 1;
    rep.value = partition_sum(d, partition);
    rep.grid = "explicit";
    return rep;
}

EnergyReport energy_partition(const Driver& d, double T, int n) {
    std::vector<double> pts(n + 1);
    for (int i = 0; i <= n; ++i) pts[i] = T * i / n;
    EnergyReport rep = energy_partition(d, T, pts);
    rep.grid = "uniform";
    return rep;
}

EnergyReport energy_quadrature_range(const Driver& d, double a, double b,
                                     int panels) {
    if (!(b > a) || a < 0 || b > d.horizon * (1.0 + 1e-12))
        throw std::invalid_argument("energy_quadrature: bad range");
    if (!d.has_slope()) {
        // No derivative: refined dyadic partition, flagged as a fallback.
        EnergyReport rep;
        rep.method = EnergyMethod::partition;
        rep.fallback_warning = true;
        rep.grid = "dyadic";
        double prev = 0.0;
        int n = 256;
        for (; n <= (1 << 18); n *= 2) {
            std::vector<double> pts(n + 1);
            for (int i = 0; i <= n; ++i) pts[i] = a + (b - a) * i / n;
            double cur = partition_sum(d, pts);
            rep.value = cur;
            rep.n = n;
            rep.error_estimate = std::abs(cur - prev);
            if (!std::isfinite(cur)) break;
            if (n > 256 && rep.error_estimate < 1e-10 * std::max(1.0, cur)) break;
            prev = cur;
        }
        return rep;
    }

    auto f = [&](double t) {
        const double s = d.slope(t);
        return 0.5 * s * s;
    };
    auto piece = [&](double lo, double hi, bool sub_lo, bool sub_hi, int pan) {
        if (!(hi > lo)) return 0.0;
        double acc = 0.0;
        double l = lo, h = hi;
        const double w = hi - lo;
        if (sub_lo) {
            // first panel with u = sqrt(t - lo)
            const double p = lo + w / pan;
            acc += integrate_gl(
                [&](double u) { return f(lo + u * u) * 2.0 * u; }, 0.0,
                std::sqrt(p - lo), 4);
            l = p;
        }
        if (sub_hi) {
            const double p = hi - w / pan;
            acc += integrate_gl(
                [&](double u) { return f(hi - u * u) * 2.0 * u; }, 0.0,
                std::sqrt(hi - p), 4);
            h = p;
        }
        const int rem = pan - (sub_lo ? 1 : 0) - (sub_hi ? 1 : 0);
        if (h > l) acc += integrate_gl(f, l, h, std::max(1, rem));
        return acc;
    };

    const double eps = 1e-14 * std::max(1.0, d.horizon);
    const bool sub_start = d.sqrt_start && a <= eps;
    const bool sub_end = d.sqrt_end && b >= d.horizon - eps;
    EnergyReport rep;
    rep.method = EnergyMethod::quadrature;
    rep.n = panels;
    rep.grid = "gauss-legendre 32/panel";
    rep.value = piece(a, b, sub_start, sub_end, panels);
    const double coarse = piece(a, b, sub_start, sub_end, std::max(2, panels / 2));
    rep.error_estimate = std::abs(rep.value - coarse);
    return rep;
}

EnergyReport energy_quadrature(const Driver& d, double T, int panels) {
    return energy_quadrature_range(d, 0.0, T, panels);
}

double wang_energy(double theta) {
    if (!(theta > 0.0) || !(theta < kPi))
        throw std::invalid_argument("wang_energy: theta in (0, pi)");
    return -8.0 * std::log(std::sin(theta));
}

double emw_energy(double r) {
    if (!(r > 0.0)) throw std::invalid_argument("emw_energy: r must be positive");
    return -8.0 * std::log(2.0 * std::sqrt(r) / (1.0 + r));
}

double wang_partial_energy(double theta, double t) {
    const WangParams p(theta);
    if (t < 0 || t > p.tau * (1.0 + 1e-12))
        throw std::invalid_argument("wang_partial_energy: t outside [0, tau]");
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(theta - kPi / 2) < 1e-12) return 0.0;
    const double y = wang_tip_image(theta, t).imag();
    const double y4 = y * y * y * y;
    return -4.0 * std::log(s * s + (c * c / (s * s * s * s)) * y4);
}

}  // namespace loewner
