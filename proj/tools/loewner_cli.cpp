#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loewner/compare.hpp"
#include "loewner/driver_library.hpp"
#include "loewner/energy.hpp"
#include "loewner/families.hpp"
#include "loewner/flow.hpp"
#include "loewner/io.hpp"
#include "loewner/verify.hpp"
#include "loewner/welding.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace loewner;

struct TraceOptions {
    std::string family = "wang";
    double theta = kPi / 3;
    double x0 = -1.0, y0 = 2.0;
    double ratio = 0.0;
    double alpha = 0.0;
    double c = 0.0;
    double T = -1.0;
    int steps = 4000;
    int samples = 0;
    std::string out = ".";
    std::string format = "csv,svg";
};

Driver family_driver(const TraceOptions& opt, double& T) {
    if (opt.family == "wang") {
        Driver d = wang_lambda_down(opt.theta);
        T = d.horizon;
        return d;
    }
    if (opt.family == "emw") {
        Driver d = emw_lambda(opt.x0, opt.y0);
        T = d.horizon;
        return d;
    }
    if (opt.family == "gamma0") {
        Driver d = reverse_driver(gamma0_xi());
        T = d.horizon;
        return d;
    }
    if (opt.family == "universal") {
        Driver d = universal_gamma_lambda();
        T = opt.T > 0 ? opt.T
            : opt.ratio > 0 ? universal_truncation_time(opt.ratio)
                            : d.horizon;
        return d;
    }
    if (opt.family == "arc") {
        Driver d = circular_arc_driver();
        T = opt.T > 0 ? opt.T : arc_time_for_angle(opt.theta);
        return d;
    }
    if (opt.family == "sqrt") {
        const double horizon = opt.T > 0 ? opt.T : 1.0;
        T = horizon;
        const double c = opt.alpha > 0 ? sqrt_c(opt.alpha) : opt.c;
        return sqrt_driver(c, horizon);
    }
    throw CLI::ValidationError("--family", "unknown family " + opt.family);
}

bool has_format(const std::string& formats, const std::string& f) {
    return formats.find(f) != std::string::npos;
}

int cmd_trace(const TraceOptions& opt) {
    double T = 0.0;
    const Driver d = family_driver(opt, T);
    const CurveTrace trace = trace_curve(d, T, opt.steps, opt.samples);

    fs::create_directories(opt.out);
    const fs::path base = fs::path(opt.out) / (opt.family + "_curve");
    if (has_format(opt.format, "csv")) {
        std::vector<std::vector<double>> rows;
        rows.reserve(trace.times.size());
        for (size_t i = 0; i < trace.times.size(); ++i)
            rows.push_back({trace.times[i], trace.points[i].real(),
                            trace.points[i].imag()});
        write_csv(base.string() + ".csv", "t,re,im", rows);

        std::vector<std::vector<double>> drows;
        for (const auto& [t, v] : sample_driver(d, T, std::min(opt.steps, 2000)))
            drows.push_back({t, v});
        write_csv((fs::path(opt.out) / (opt.family + "_driver.csv")).string(),
                  "t,value", drows);
    }
    if (has_format(opt.format, "json")) {
        json arr = json::array();
        for (size_t i = 0; i < trace.times.size(); ++i)
            arr.push_back({{"t", trace.times[i]},
                           {"re", trace.points[i].real()},
                           {"im", trace.points[i].imag()}});
        std::ofstream f(base.string() + ".json");
        f << json{{"family", opt.family}, {"points", arr}}.dump(2) << "\n";
    }
    if (has_format(opt.format, "svg")) {
        SvgOptions svg;
        svg.draw_unit_circle = opt.family == "wang" || opt.family == "gamma0";
        write_svg(base.string() + ".svg", {{trace.points, "#1f77b4"}}, svg);
    }
    std::cout << opt.family << ": " << trace.points.size()
              << " samples, endpoint = " << format_double(trace.points.back().real())
              << (trace.points.back().imag() >= 0 ? "+" : "")
              << format_double(trace.points.back().imag()) << "i\n";
    return 0;
}

int cmd_verify(double tol, const std::string& only, const std::string& out) {
    const auto results = run_acceptance(tol, only);
    json checks = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.check << " [" << r.params
                  << "]  residual=" << format_double(r.residual)
                  << (r.at_least ? " >= " : " <= ") << format_double(r.tolerance)
                  << "\n";
        checks.push_back({{"check", r.check},
                          {"params", r.params},
                          {"residual", r.residual},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass}});
        all_pass = all_pass && r.pass;
    }
    json report = {{"schema", 1},
                   {"tol_scale", tol},
                   {"checks", checks},
                   {"all_pass", all_pass}};
    if (!out.empty()) {
        fs::path path(out);
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream f(out);
        f << report.dump(2) << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

std::vector<double> parse_deltas(const std::string& list) {
    std::vector<double> out;
    std::string token;
    for (char ch : list + ",") {
        if (ch == ',') {
            if (!token.empty()) out.push_back(std::stod(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (out.empty())
        throw CLI::ValidationError("--deltas", "empty delta grid");
    return out;
}

void write_sweep(const fs::path& base, const RatioSweep& sweep) {
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < sweep.param.size(); ++i)
        rows.push_back({sweep.param[i], sweep.num[i], sweep.den[i], sweep.ratio[i]});
    write_csv(base.string() + ".csv", "param,num,den,ratio", rows);
    write_xy_svg(base.string() + ".svg", sweep.param, {sweep.ratio}, {"#d62728"});
}

int cmd_compare(double theta, const std::string& deltas_spec,
                const std::string& out) {
    const auto deltas = parse_deltas(deltas_spec);
    fs::create_directories(out);
    const fs::path dir(out);

    write_sweep(dir / "local98_curve", local_ratio_curve(
        [] { Driver d; d.value = [](double t) { return t; };
             d.slope = [](double) { return 1.0; }; d.horizon = 1.0;
             d.label = "linear"; return d; }(), deltas));
    write_sweep(dir / "local98_weld", local_ratio_weld(
        [] { Driver d; d.value = [](double t) { return t; };
             d.slope = [](double) { return 1.0; }; d.horizon = 1.0;
             d.label = "linear"; return d; }(), deltas));

    {
        const auto rows = arc_exact_ratios({kPi / 6, kPi / 4, kPi / 3, 1.5});
        std::vector<std::vector<double>> csv;
        for (const auto& r : rows)
            csv.push_back({r.theta, r.arc_energy, r.arc_closed_form,
                           r.ratio_to_minimal});
        write_csv((dir / "arc_ratios.csv").string(),
                  "theta,arc_energy,closed_form,ratio_to_minimal", csv);
    }

    {
        std::vector<double> thetas;
        for (double d : {0.1, 0.05, 0.02, 0.01, 0.005}) {
            thetas.push_back(kPi / 2 - d);
            thetas.push_back(kPi / 2 + d);
        }
        const auto tables = asymptotic_ratio_tables(thetas);
        write_sweep(dir / "asymptotic_welding", tables.welding_side);
        write_sweep(dir / "asymptotic_tip", tables.tip_side);
    }

    {
        const auto res = same_weld_distinct_curves(theta);
        auto dump = [&](const CurveTrace& tr, const std::string& name) {
            std::vector<std::vector<double>> rows;
            for (size_t i = 0; i < tr.times.size(); ++i)
                rows.push_back({tr.times[i], tr.points[i].real(),
                                tr.points[i].imag()});
            write_csv((dir / name).string(), "t,re,im", rows);
        };
        dump(res.point_minimizer, "same_weld_wang.csv");
        dump(res.welding_minimizer, "same_weld_emw.csv");
        write_svg((dir / "same_weld.svg").string(),
                  {{res.point_minimizer.points, "#1f77b4"},
                   {res.welding_minimizer.points, "#ff7f0e"}});
        std::cout << "same-weld sup distance = " << format_double(res.curve_distance)
                  << ", driver gap = " << format_double(res.driver_gap) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loewner evolution energy-minimizer laboratory"};
    app.require_subcommand(1);

    TraceOptions topt;
    auto* trace = app.add_subcommand("trace", "trace a curve family to CSV/SVG");
    trace->add_option("--family", topt.family,
                      "wang|emw|gamma0|universal|arc|sqrt");
    trace->add_option("--theta", topt.theta, "angle in radians");
    trace->add_option("--x0", topt.x0, "left welding endpoint (< 0)");
    trace->add_option("--y0", topt.y0, "right welding endpoint (> 0)");
    trace->add_option("--ratio", topt.ratio, "welding ratio in (0,1)");
    trace->add_option("--alpha", topt.alpha, "slit angle fraction in (0,1)");
    trace->add_option("--c", topt.c, "sqrt-driver coefficient");
    trace->add_option("--T", topt.T, "capacity horizon override");
    trace->add_option("--steps", topt.steps, "capacity steps");
    trace->add_option("--samples", topt.samples, "emitted samples (0 = auto)");
    trace->add_option("--out", topt.out, "output directory");
    trace->add_option("--format", topt.format, "csv,svg subset");

    double vtol = 1.0;
    std::string vonly, vout;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--tol", vtol, "tolerance scale factor");
    verify->add_option("--only", vonly, "run checks whose name contains this");
    verify->add_option("--out", vout, "JSON report path");

    double ctheta = kPi / 3;
    std::string cdeltas = "1e-3,1e-4,1e-5,1e-6";
    std::string cout_dir = "compare_out";
    auto* compare = app.add_subcommand("compare", "energy-comparison sweeps");
    compare->add_option("--theta", ctheta, "angle for the same-weld figure");
    compare->add_option("--deltas", cdeltas, "comma-separated delta grid");
    compare->add_option("--out", cout_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*trace) return cmd_trace(topt);
        if (*verify) return cmd_verify(vtol, vonly, vout);
        if (*compare) return cmd_compare(ctheta, cdeltas, cout_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
