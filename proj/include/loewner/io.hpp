#pragma once

#include <complex>
#include <string>
#include <vector>

namespace loewner {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Write rows as CSV under the given comma-separated header.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

struct SvgOptions {
    double width = 640.0;
    double height = 480.0;
    bool draw_real_axis = true;
    bool draw_unit_circle = false;
};

/// One polyline in data coordinates plus a stroke color.
struct SvgPath {
    std::vector<std::complex<double>> points;
    std::string color = "#1f77b4";
};

/// Render polylines into an SVG file. The viewBox is fitted to the data with
/// a 5% margin; y is flipped so the upper half-plane points up.
void write_svg(const std::string& path, const std::vector<SvgPath>& paths,
               const SvgOptions& opts = {});

/// Simple x-y line plot (used for ratio sweeps).
void write_xy_svg(const std::string& path, const std::vector<double>& x,
                  const std::vector<std::vector<double>>& series,
                  const std::vector<std::string>& colors);

}  // namespace loewner
