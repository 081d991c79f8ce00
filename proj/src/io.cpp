#include "loewner/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace loewner {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << header << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_double(row[i]);
        }
        out << "\n";
    }
}

namespace {

std::string num(double v) {
    // Fixed short form for SVG coordinates; deterministic and compact.
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
    return std::string(buf, res.ptr);
}

}  // namespace

void write_svg(const std::string& path, const std::vector<SvgPath>& paths,
               const SvgOptions& opts) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& p : paths) {
        for (const auto& z : p.points) {
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, z.imag());
            ymax = std::max(ymax, z.imag());
        }
    }
    if (!(xmin <= xmax)) { xmin = -1; xmax = 1; ymin = 0; ymax = 1; }
    if (opts.draw_real_axis) ymin = std::min(ymin, 0.0);
    if (opts.draw_unit_circle) {
        xmin = std::min(xmin, -1.05);
        xmax = std::max(xmax, 1.05);
        ymax = std::max(ymax, 1.05);
    }
    double dx = xmax - xmin, dy = ymax - ymin;
    if (dx <= 0) dx = 1;
    if (dy <= 0) dy = 1;
    xmin -= 0.05 * dx;
    xmax += 0.05 * dx;
    ymin -= 0.05 * dy;
    ymax += 0.05 * dy;

    const double sx = opts.width / (xmax - xmin);
    const double sy = opts.height / (ymax - ymin);
    auto X = [&](double x) { return (x - xmin) * sx; };
    auto Y = [&](double y) { return (ymax - y) * sy; };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << num(opts.width) << " " << num(opts.height) << "\">\n";
    if (opts.draw_real_axis) {
        out << "<line x1=\"" << num(X(xmin)) << "\" y1=\"" << num(Y(0))
            << "\" x2=\"" << num(X(xmax)) << "\" y2=\"" << num(Y(0))
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }
    if (opts.draw_unit_circle) {
        out << "<ellipse cx=\"" << num(X(0)) << "\" cy=\"" << num(Y(0))
            << "\" rx=\"" << num(sx) << "\" ry=\"" << num(sy)
            << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (const auto& p : paths) {
        out << "<polyline fill=\"none\" stroke=\"" << p.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < p.points.size(); ++i) {
            if (i) out << " ";
            out << num(X(p.points[i].real())) << "," << num(Y(p.points[i].imag()));
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_xy_svg(const std::string& path, const std::vector<double>& x,
                  const std::vector<std::vector<double>>& series,
                  const std::vector<std::string>& colors) {
    std::vector<SvgPath> paths;
    for (size_t s = 0; s < series.size(); ++s) {
        SvgPath p;
        p.color = s < colors.size() ? colors[s] : "#1f77b4";
        for (size_t i = 0; i < x.size() && i < series[s].size(); ++i)
            p.points.emplace_back(x[i], series[s][i]);
        paths.push_back(std::move(p));
    }
    SvgOptions opts;
    opts.draw_real_axis = false;
    write_svg(path, paths, opts);
}

}  // namespace loewner
