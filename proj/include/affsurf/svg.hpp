#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affsurf/tolerances.hpp"

namespace affsurf {

enum class PlotTarget { regions, jacobi_plus, jacobi_minus, zones_plus, zones_minus, scatter };

struct PlotParams {
    int curve_samples = 512;   // vertices per polyline
    double t_min = 0.35;       // parameter range for the boundary curves
    double t_max = 2.2;
    int scatter_n = 200;       // structures per signature class (scatter target)
    std::uint64_t seed = 0;
    void validate() const;     // throws parameter_domain_error
};

// Linear data-to-screen mapping used by the renderer; exposed so tests can
// locate data points inside the emitted markup.
struct PlotFrame {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;  // data bounds
    double width = 800.0, height = 600.0, margin = 50.0;
    double map_x(double x) const;
    double map_y(double y) const;
};

struct PlotResult {
    std::string svg;
    std::string csv;
    PlotFrame frame;
};

// Renders the requested target as an SVG 1.1 document (one polyline per
// curve, one circle per scatter point) plus a CSV table of the sampled data.
PlotResult render_plot(PlotTarget target, const PlotParams& params, const Tolerances& tol = {});

// Formats a screen coordinate exactly as the SVG writer does.
std::string svg_coord(double v);

} // namespace affsurf
