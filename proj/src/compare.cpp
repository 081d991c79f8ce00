#include "loewner/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "loewner/driver_library.hpp"
#include "loewner/energy.hpp"
#include "loewner/welding.hpp"

namespace loewner {

namespace {

// Eliminate the sqrt(delta) error term from the two finest sweep entries.
double richardson_sqrt(const std::vector<double>& deltas,
                       const std::vector<double>& ratios) {
    if (deltas.size() < 2) return ratios.empty() ? 0.0 : ratios.back();
    const size_t n = deltas.size();
    const double x1 = std::sqrt(deltas[n - 2]), x2 = std::sqrt(deltas[n - 1]);
    return (x1 * ratios[n - 1] - x2 * ratios[n - 2]) / (x1 - x2);
}

void check_deltas(const std::vector<double>& deltas) {
    if (deltas.empty())
        throw std::invalid_argument("ratio sweep: empty delta grid");
    for (double d : deltas)
        if (!(d > 0)) throw std::invalid_argument("ratio sweep: deltas must be > 0");
}

double polyline_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace

RatioSweep local_ratio_curve(const Driver& lam, const std::vector<double>& deltas) {
    check_deltas(deltas);
    auto s0 = lam.slope_at(0.0);
    if (!s0 || *s0 == 0.0)
        throw std::invalid_argument("local_ratio_curve: need lam'(0) != 0");
    RatioSweep sweep;
    for (double d : deltas) {
        const double num = energy_quadrature_range(lam, 0.0, d).value;
        const cplx tip = tip_point(lam, d);
        const double den = wang_energy(std::arg(tip));
        sweep.param.push_back(d);
        sweep.num.push_back(num);
        sweep.den.push_back(den);
        sweep.ratio.push_back(num / den);
    }
    sweep.extrapolated = richardson_sqrt(sweep.param, sweep.ratio);
    return sweep;
}

RatioSweep local_ratio_weld(const Driver& xi, const std::vector<double>& deltas) {
    check_deltas(deltas);
    auto s0 = xi.slope_at(0.0);
    if (!s0 || *s0 == 0.0)
        throw std::invalid_argument("local_ratio_weld: need xi'(0) != 0");
    RatioSweep sweep;
    for (double d : deltas) {
        const double num = energy_quadrature_range(xi, 0.0, d).value;
        const auto [u, v] = welded_pair_at_time(xi, d);
        const double den = emw_energy(-u / v);
        sweep.param.push_back(d);
        sweep.num.push_back(num);
        sweep.den.push_back(den);
        sweep.ratio.push_back(num / den);
    }
    sweep.extrapolated = richardson_sqrt(sweep.param, sweep.ratio);
    return sweep;
}

std::vector<ArcRatioRow> arc_exact_ratios(const std::vector<double>& thetas) {
    const Driver arc = circular_arc_driver();
    std::vector<ArcRatioRow> rows;
    for (double theta : thetas) {
        ArcRatioRow row;
        row.theta = theta;
        const double t = arc_time_for_angle(theta);
        row.arc_energy = energy_quadrature_range(arc, 0.0, t).value;
        row.arc_closed_form = -9.0 * std::log(std::sin(theta));
        row.ratio_to_minimal = row.arc_energy / wang_energy(theta);
        rows.push_back(row);
    }
    return rows;
}

double beta_of_r(double r) {
    if (!(r > 0) || !(r < 1)) throw std::invalid_argument("beta_of_r: r in (0,1)");
    const double num = 2.0 * (1.0 + r) + (1.0 - r) * std::log(r);
    const double den = kPi * (1.0 - r);
    return 0.5 * (1.5 * kPi - std::atan(num / den));
}

double r_of_beta(double beta) {
    if (!(beta > kPi / 2) || !(beta < kPi))
        throw std::invalid_argument("r_of_beta: beta in (pi/2, pi)");
    // beta_of_r decreases from pi at r -> 0+ to pi/2 at r -> 1-.
    const double lo = 1e-9, hi = 1.0 - 1e-12;
    const int grid = 64;
    double prev = beta_of_r(lo);
    for (int i = 1; i <= grid; ++i) {
        const double cur = beta_of_r(lo + (hi - lo) * i / grid);
        if (cur >= prev)
            throw std::runtime_error("r_of_beta: monotonicity failure");
        prev = cur;
    }
    return bisect([&](double r) { return beta_of_r(r) - beta; }, lo, hi, 1e-15);
}

AsymptoticTables asymptotic_ratio_tables(const std::vector<double>& thetas) {
    check_deltas(thetas);
    AsymptoticTables tables;
    for (double theta : thetas) {
        const auto [xw, yw] = wang_weld_endpoints(theta);
        const double r_weld = -xw / yw;
        const double num_w = emw_energy(r_weld);
        const double den_w = wang_energy(theta);
        tables.welding_side.param.push_back(theta);
        tables.welding_side.num.push_back(num_w);
        tables.welding_side.den.push_back(den_w);
        tables.welding_side.ratio.push_back(num_w / den_w);

        const double beta = theta <= kPi / 2 ? kPi - theta : theta;
        const double r_tip = r_of_beta(beta);
        const double num_t = emw_energy(r_tip);
        tables.tip_side.param.push_back(theta);
        tables.tip_side.num.push_back(num_t);
        tables.tip_side.den.push_back(den_w);
        tables.tip_side.ratio.push_back(num_t / den_w);
    }
    if (!tables.welding_side.ratio.empty()) {
        tables.welding_side.extrapolated = tables.welding_side.ratio.back();
        tables.tip_side.extrapolated = tables.tip_side.ratio.back();
    }
    return tables;
}

namespace {

double point_segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double s = ((p - a) * std::conj(ab)).real() / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

double one_sided(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (const cplx& p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i + 1 < b.size(); ++i)
            best = std::min(best, point_segment_distance(p, b[i], b[i + 1]));
        worst = std::max(worst, best);
    }
    return worst;
}

double polyline_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace

SameWeldResult same_weld_distinct_curves(double theta, int n, int samples) {
    const WangParams wp(theta);
    const auto [x0, y0] = wang_weld_endpoints(theta);
    const EmwParams ep(x0, y0);

    SameWeldResult res;
    const Driver lam_point = wang_lambda_down(theta);
    const Driver lam_weld = emw_lambda(x0, y0);
    res.point_minimizer = trace_curve(lam_point, wp.tau, n, samples);
    res.welding_minimizer = trace_curve(lam_weld, ep.tau, n, samples);
    res.curve_distance =
        polyline_distance(res.point_minimizer.points, res.welding_minimizer.points);

    const double t_common = std::min(wp.tau, ep.tau);
    for (int k = 0; k <= 400; ++k) {
        const double t = t_common * k / 400;
        res.driver_gap = std::max(
            res.driver_gap, std::abs(lam_point.value(t) - lam_weld.value(t)));
    }
    res.point_tip_arg = theta;
    res.welding_tip_arg = std::arg(tip_point(lam_weld, ep.tau, 6000));
    return res;
}

}  // namespace loewner
