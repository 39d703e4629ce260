#include "affsurf/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "affsurf/region.hpp"
#include "affsurf/sampling.hpp"
#include "affsurf/tensor.hpp"

namespace affsurf {

namespace {

std::string fmt_double(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Series {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> pts;  // data coordinates
};

struct ScatterPoint {
    std::string layer;
    std::string color;
    double x, y;
};

// log-spaced parameter grid with the two distinguished parameters inserted
std::vector<double> curve_grid(const PlotParams& p) {
    std::vector<double> ts;
    const double l0 = std::log(p.t_min), l1 = std::log(p.t_max);
    for (int i = 0; i < p.curve_samples; ++i)
        ts.push_back(std::exp(l0 + (l1 - l0) * i / (p.curve_samples - 1)));
    const double special[2] = {1.0, 1.0 / std::sqrt(2.0)};
    for (double s : special)
        if (s > p.t_min && s < p.t_max) ts.push_back(s);
    std::sort(ts.begin(), ts.end());
    return ts;
}

} // namespace

void PlotParams::validate() const {
    if (curve_samples < 2 || !(t_min > 0.0) || !(t_max > t_min) || scatter_n < 0)
        throw parameter_domain_error("plot: invalid parameter ranges");
}

double PlotFrame::map_x(double x) const {
    const double span = x1 > x0 ? x1 - x0 : 1.0;
    return margin + (x - x0) / span * (width - 2.0 * margin);
}

double PlotFrame::map_y(double y) const {
    const double span = y1 > y0 ? y1 - y0 : 1.0;
    return height - margin - (y - y0) / span * (height - 2.0 * margin);
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

PlotResult render_plot(PlotTarget target, const PlotParams& params, const Tolerances& tol) {
    params.validate();
    std::vector<Series> series;
    std::vector<ScatterPoint> points;
    std::string csv;

    switch (target) {
        case PlotTarget::regions: {
            Series sp{"sigma_plus", "#d62728", {}}, sm{"sigma_minus", "#1f77b4", {}};
            csv = "curve,t,p,P\n";
            for (double t : curve_grid(params)) {
                const InvariantPoint a = sigma_plus(t);
                sp.pts.emplace_back(a.p, a.P);
                csv += "sigma_plus," + fmt_double(t) + "," + fmt_double(a.p) + "," +
                       fmt_double(a.P) + "\n";
            }
            for (double t : curve_grid(params)) {
                const InvariantPoint a = sigma_minus(t);
                sm.pts.emplace_back(a.p, a.P);
                csv += "sigma_minus," + fmt_double(t) + "," + fmt_double(a.p) + "," +
                       fmt_double(a.P) + "\n";
            }
            series = {sp, sm};
            break;
        }
        case PlotTarget::jacobi_plus:
        case PlotTarget::jacobi_minus: {
            const DefSign sig =
                target == PlotTarget::jacobi_plus ? DefSign::plus : DefSign::minus;
            Series graph{"jacobi_graph", "#2ca02c", {}}, axis{"axis", "#7f7f7f", {}};
            csv = "curve,x,y\n";
            const double hi = sig == DefSign::plus ? 1.0 : 1.0 - 1e-6;
            for (int i = 1; i <= params.curve_samples; ++i) {
                const double x = hi * i / params.curve_samples;
                const auto y = jacobi_locus_y(sig, x);
                if (!y) continue;
                graph.pts.emplace_back(x, *y);
                csv += "jacobi_graph," + fmt_double(x) + "," + fmt_double(*y) + "\n";
            }
            axis.pts.emplace_back(1e-3, 0.0);
            axis.pts.emplace_back(2.0, 0.0);
            csv += "axis,0.001,0\naxis,2,0\n";
            series = {graph, axis};
            break;
        }
        case PlotTarget::zones_plus: {
            Series disc{"discriminant", "#9467bd", {}}, graph{"jacobi_graph", "#2ca02c", {}},
                ray{"ray", "#ff7f0e", {}}, axis{"axis", "#7f7f7f", {}};
            csv = "curve,x,y\n";
            for (int i = 1; i <= params.curve_samples; ++i) {
                const double x = static_cast<double>(i) / params.curve_samples;
                disc.pts.emplace_back(x, discriminant_y(x));
                const auto y = jacobi_locus_y(DefSign::plus, x);
                if (y) graph.pts.emplace_back(x, *y);
                csv += "discriminant," + fmt_double(x) + "," + fmt_double(discriminant_y(x)) +
                       "\n";
                if (y) csv += "jacobi_graph," + fmt_double(x) + "," + fmt_double(*y) + "\n";
            }
            ray.pts.emplace_back(1.0, 0.0);
            ray.pts.emplace_back(1.0, 4.0);
            axis.pts.emplace_back(1e-3, 0.0);
            axis.pts.emplace_back(2.0, 0.0);
            csv += "ray,1,0\nray,1,4\naxis,0.001,0\naxis,2,0\n";
            series = {disc, graph, ray, axis};
            break;
        }
        case PlotTarget::zones_minus: {
            Series graph{"jacobi_graph", "#2ca02c", {}}, axis{"axis", "#7f7f7f", {}};
            csv = "curve,x,y\n";
            for (int i = 1; i < params.curve_samples; ++i) {
                const double x = static_cast<double>(i) / params.curve_samples;
                const auto y = jacobi_locus_y(DefSign::minus, x);
                if (!y) continue;
                graph.pts.emplace_back(x, *y);
                csv += "jacobi_graph," + fmt_double(x) + "," + fmt_double(*y) + "\n";
            }
            axis.pts.emplace_back(1e-3, 0.0);
            axis.pts.emplace_back(2.0, 0.0);
            csv += "axis,0.001,0\naxis,2,0\n";
            series = {graph, axis};
            break;
        }
        case PlotTarget::scatter: {
            Rng rng(params.seed);
            csv = "sig,psi3,Psi3\n";
            const struct {
                SigClass sig;
                const char* name;
                const char* color;
            } layers[3] = {{SigClass::plus, "plus", "#d62728"},
                           {SigClass::minus, "minus", "#1f77b4"},
                           {SigClass::zero, "zero", "#2ca02c"}};
            for (const auto& layer : layers) {
                for (int i = 0; i < params.scatter_n; ++i) {
                    const ChristoffelA g = sample_type_a_rank2(layer.sig, rng);
                    const double p = psi3(g, tol), P = Psi3(g, tol);
                    points.push_back({layer.name, layer.color, p, P});
                    csv += std::string(layer.name) + "," + fmt_double(p) + "," + fmt_double(P) +
                           "\n";
                }
            }
            break;
        }
    }

    PlotFrame frame;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            frame.x0 = frame.x1 = x;
            frame.y0 = frame.y1 = y;
            first = false;
            return;
        }
        frame.x0 = std::min(frame.x0, x);
        frame.x1 = std::max(frame.x1, x);
        frame.y0 = std::min(frame.y0, y);
        frame.y1 = std::max(frame.y1, y);
    };
    for (const auto& s : series)
        for (const auto& [x, y] : s.pts) grow(x, y);
    for (const auto& p : points) grow(p.x, p.y);
    if (first) {
        frame.x0 = frame.y0 = 0.0;
        frame.x1 = frame.y1 = 1.0;
    }
    const double pad_x = 0.05 * (frame.x1 - frame.x0 + 1e-12);
    const double pad_y = 0.05 * (frame.y1 - frame.y0 + 1e-12);
    frame.x0 -= pad_x;
    frame.x1 += pad_x;
    frame.y0 -= pad_y;
    frame.y1 += pad_y;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    for (const auto& s : series) {
        svg << "<polyline id=\"" << s.name << "\" fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            if (i) svg << ' ';
            svg << svg_coord(frame.map_x(s.pts[i].first)) << ','
                << svg_coord(frame.map_y(s.pts[i].second));
        }
        svg << "\"/>\n";
    }
    svg << "<g id=\"scatter\">";
    for (const auto& p : points) {
        svg << "<circle cx=\"" << svg_coord(frame.map_x(p.x)) << "\" cy=\""
            << svg_coord(frame.map_y(p.y)) << "\" r=\"2\" fill=\"" << p.color
            << "\" fill-opacity=\"0.6\"/>";
    }
    svg << "</g>\n</svg>\n";

    return {svg.str(), csv, frame};
}

} // namespace affsurf
