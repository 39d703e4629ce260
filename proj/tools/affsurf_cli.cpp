// Command line front end: classification, equivalence, canonical forms,
// sampling and figure emission for homogeneous affine surface structures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "affsurf/report.hpp"
#include "affsurf/svg.hpp"

namespace {

using namespace affsurf;

struct IoOptions {
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
    Tolerances tol;
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_format = true) {
    cmd->add_option("--input", io.input, "input path or - for stdin");
    cmd->add_option("--output", io.output, "output path or - for stdout");
    if (with_format)
        cmd->add_option("--format", io.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol-zero", io.tol.zero_tol, "absolute zero tolerance");
    cmd->add_option("--tol-invariant", io.tol.invariant_tol, "relative invariant tolerance");
}

struct Streams {
    std::istream* in = nullptr;
    std::ostream* out = nullptr;
    std::ifstream fin;
    std::ofstream fout;
    bool ok(const IoOptions& io, bool need_input) {
        if (need_input) {
            if (io.input == "-") {
                in = &std::cin;
            } else {
                fin.open(io.input);
                if (!fin) {
                    std::cerr << "cannot open input: " << io.input << "\n";
                    return false;
                }
                in = &fin;
            }
        }
        if (io.output == "-") {
            out = &std::cout;
        } else {
            fout.open(io.output);
            if (!fout) {
                std::cerr << "cannot open output: " << io.output << "\n";
                return false;
            }
            out = &fout;
        }
        return true;
    }
};

int run_plot_command(const std::string& target_name, const PlotParams& params,
                     const std::string& output, const Tolerances& tol) {
    PlotTarget target;
    if (target_name == "regions")
        target = PlotTarget::regions;
    else if (target_name == "jacobi_plus")
        target = PlotTarget::jacobi_plus;
    else if (target_name == "jacobi_minus")
        target = PlotTarget::jacobi_minus;
    else if (target_name == "zones_plus")
        target = PlotTarget::zones_plus;
    else if (target_name == "zones_minus")
        target = PlotTarget::zones_minus;
    else if (target_name == "scatter")
        target = PlotTarget::scatter;
    else {
        std::cerr << "unknown plot target: " << target_name << "\n";
        return 2;
    }
    PlotResult result;
    try {
        result = render_plot(target, params, tol);
    } catch (const parameter_domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::string svg_path = output, csv_path;
    const auto dot = output.rfind(".svg");
    if (dot != std::string::npos && dot == output.size() - 4)
        csv_path = output.substr(0, dot) + ".csv";
    else {
        svg_path = output + ".svg";
        csv_path = output + ".csv";
    }
    std::ofstream svg(svg_path);
    if (!svg) {
        std::cerr << "cannot open output: " << svg_path << "\n";
        return 1;
    }
    svg << result.svg;
    std::ofstream csv(csv_path);
    if (!csv) {
        std::cerr << "cannot open output: " << csv_path << "\n";
        return 1;
    }
    csv << result.csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification toolkit for homogeneous affine surface structures"};
    app.require_subcommand(1);

    IoOptions classify_io, canon_io, equiv_io, sample_io;
    bool oriented = false;

    CLI::App* classify = app.add_subcommand("classify", "classify a stream of records");
    add_io_options(classify, classify_io);

    CLI::App* canon = app.add_subcommand("canon", "canonical forms and chart coordinates");
    add_io_options(canon, canon_io);

    CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of a pair of records");
    add_io_options(equiv, equiv_io);
    equiv->add_flag("--oriented", oriented, "compare in the oriented category");

    std::string family_name = "A", sig_name = "plus";
    int sample_n = 10;
    std::uint64_t seed = 0;
    CLI::App* sample = app.add_subcommand("sample", "emit pseudo-random structures");
    add_io_options(sample, sample_io);
    sample->add_option("--family", family_name, "structure family")
        ->check(CLI::IsMember({"A", "B"}));
    sample->add_option("--sig", sig_name, "signature class for family A")
        ->check(CLI::IsMember({"plus", "minus", "zero"}));
    sample->add_option("--n", sample_n, "number of records")->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", seed, "generator seed");

    std::string plot_target = "regions", plot_output = "plot.svg";
    PlotParams plot_params;
    Tolerances plot_tol;
    CLI::App* plot = app.add_subcommand("plot", "emit SVG + CSV figures");
    plot->add_option("target", plot_target,
                     "regions | jacobi_plus | jacobi_minus | zones_plus | zones_minus | scatter");
    plot->add_option("--output", plot_output, "output SVG path (CSV written alongside)");
    plot->add_option("--samples", plot_params.curve_samples, "vertices per curve");
    plot->add_option("--tmin", plot_params.t_min, "lower parameter bound");
    plot->add_option("--tmax", plot_params.t_max, "upper parameter bound");
    plot->add_option("--n", plot_params.scatter_n, "scatter points per signature class");
    plot->add_option("--seed", plot_params.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            classify_io.tol.validate();
            Streams s;
            if (!s.ok(classify_io, true)) return 2;
            return run_classify(*s.in, *s.out, classify_io.tol, classify_io.format);
        }
        if (canon->parsed()) {
            canon_io.tol.validate();
            Streams s;
            if (!s.ok(canon_io, true)) return 2;
            return run_canon(*s.in, *s.out, canon_io.tol, canon_io.format);
        }
        if (equiv->parsed()) {
            equiv_io.tol.validate();
            Streams s;
            if (!s.ok(equiv_io, true)) return 2;
            return run_equiv(*s.in, *s.out, oriented, equiv_io.tol, equiv_io.format);
        }
        if (sample->parsed()) {
            sample_io.tol.validate();
            Streams s;
            if (!s.ok(sample_io, false)) return 2;
            const Family family = family_name == "A" ? Family::A : Family::B;
            std::optional<SigClass> sig;
            if (family == Family::A)
                sig = sig_name == "plus" ? SigClass::plus
                      : sig_name == "minus" ? SigClass::minus
                                            : SigClass::zero;
            return run_sample(*s.out, family, sig, sample_n, seed, sample_io.format);
        }
        if (plot->parsed()) {
            plot_tol.validate();
            return run_plot_command(plot_target, plot_params, plot_output, plot_tol);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
