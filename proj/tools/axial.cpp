// Command-line front end: classify/analyze germs and export plot data.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "axial/blowup.hpp"
#include "axial/contact.hpp"
#include "axial/errors.hpp"
#include "axial/io/export.hpp"
#include "axial/io/parser.hpp"
#include "axial/io/report.hpp"
#include "axial/normalization.hpp"
#include "axial/parabola.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    int order = axial::kDefaultOrder;
    double tolerance = 1e-9;
    std::string format = "json";
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw axial::PreconditionError("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Globals& g, const json& report) {
    if (g.format == "csv") {
        std::cout << axial::io::report_to_csv(report);
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

void emit(const Globals& g, const axial::io::Table& t) {
    if (g.format == "csv") {
        std::cout << t.to_csv();
    } else {
        std::cout << t.to_json().dump(2) << '\n';
    }
}

json batch(const Globals& g, const std::string& path) {
    std::vector<std::pair<int, std::string>> jobs;
    {
        std::istringstream in(read_input(path));
        std::string line;
        for (int n = 1; std::getline(in, line); ++n) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            jobs.emplace_back(n, line);
        }
    }
    const axial::io::AnalyzeOptions opt{axial::Tolerance{g.tolerance}};
    const auto run = [&](const std::pair<int, std::string>& job) {
        json entry{{"line", job.first}};
        try {
            entry["report"] = axial::io::analyze(axial::io::parse_germ(job.second, g.order), opt);
        } catch (const axial::Error& e) {
            entry["error"] = {{"exit_code", axial::exit_code(e.kind())}, {"message", e.what()}};
        }
        return entry;
    };

    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<json> results(jobs.size());
    for (std::size_t start = 0; start < jobs.size(); start += workers) {
        std::vector<std::future<json>> pending;
        const std::size_t end = std::min(jobs.size(), start + workers);
        for (std::size_t k = start; k < end; ++k) pending.push_back(std::async(std::launch::async, run, jobs[k]));
        for (std::size_t k = start; k < end; ++k) results[k] = pending[k - start].get();
    }
    json out = json::array();
    for (auto& r : results) out.push_back(std::move(r));
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axial, umbilic and singular curvature of corank-1 surface germs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--order", g.order, "Jet truncation order")->check(CLI::Range(1, 30));
    app.add_option("--tolerance", g.tolerance, "Base degeneracy tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::string input;
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Germ file (expression text or JSON document); '-' or omitted reads stdin");
    };

    auto* classify = app.add_subcommand("classify", "Corank, Monge coefficients and parabola class");
    add_input(classify);

    std::string batch_file;
    auto* analyze = app.add_subcommand("analyze", "Full curvature report");
    add_input(analyze);
    analyze->add_option("--batch", batch_file, "File with one germ expression per line");

    std::string kind = "branches";
    int samples = 41;
    int angles = 15;
    double r_max = 0.1;
    double t_max = 0.1, y_min = -2.0, y_max = 2.0, extent = 1.0, phi = 1.0, u_max = 0.05;
    auto* curves = app.add_subcommand("curves", "Export plot data");
    add_input(curves);
    curves->add_option("--kind", kind)->check(CLI::IsMember({"branches", "parabola", "mesh", "blowup-grid", "contour"}));
    curves->add_option("--samples", samples)->check(CLI::Range(1, 100000));
    curves->add_option("--tmax", t_max);
    curves->add_option("--ymin", y_min);
    curves->add_option("--ymax", y_max);
    curves->add_option("--extent", extent);
    curves->add_option("--phi", phi);
    curves->add_option("--umax", u_max);
    curves->add_option("--rmax", r_max);
    curves->add_option("--angles", angles)->check(CLI::Range(1, 10000));
    auto* mesh = app.add_subcommand("mesh", "Sample the germ on a square grid");
    add_input(mesh);
    mesh->add_option("--extent", extent);
    mesh->add_option("--samples", samples)->check(CLI::Range(2, 10000));

    auto* blowup = app.add_subcommand("blowup", "Gaussian curvature on the blow-up of a fold");
    add_input(blowup);
    blowup->add_option("--rmax", r_max);
    blowup->add_option("--angles", angles, "Number of angles in [-1.4, 1.4]")->check(CLI::Range(1, 10000));

    auto* contour = app.add_subcommand("contour", "Contour generator profile for xi = (0, cos phi, sin phi)");
    add_input(contour);
    contour->add_option("--phi", phi);
    contour->add_option("--samples", samples)->check(CLI::Range(1, 100000));
    contour->add_option("--umax", u_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const axial::Tolerance tol{g.tolerance};
        const axial::io::AnalyzeOptions opt{tol};
        if (analyze->parsed() && !batch_file.empty()) {
            std::cout << batch(g, batch_file).dump(2) << '\n';
            return 0;
        }
        const axial::MapGerm f = axial::io::parse_germ(read_input(input), g.order);

        if (classify->parsed()) {
            emit(g, axial::io::classify_report(f, opt));
        } else if (analyze->parsed()) {
            emit(g, axial::io::analyze(f, opt));
        } else if (mesh->parsed() || (curves->parsed() && kind == "mesh")) {
            emit(g, axial::io::mesh_table(f, extent, samples, tol));
        } else if (blowup->parsed() || (curves->parsed() && kind == "blowup-grid")) {
            std::vector<double> radii;
            for (double r = r_max; radii.size() < 3; r /= 10.0) radii.push_back(r);
            emit(g, axial::io::blowup_table(f, radii, linspace(-1.4, 1.4, angles), tol));
        } else if (contour->parsed() || (curves->parsed() && kind == "contour")) {
            emit(g, axial::io::contour_table(axial::koenderink_profile(f, phi, samples, u_max, tol)));
        } else if (curves->parsed() && kind == "parabola") {
            const axial::MongeData md = axial::to_monge_form(f, tol);
            emit(g, axial::io::parabola_table(axial::curvature_parabola(md.coeffs, tol), y_min, y_max, samples));
        } else {
            emit(g, axial::io::branches_table(axial::intersection_branches(f, samples, t_max, tol)));
        }
    } catch (const axial::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return axial::exit_code(e.kind());
    }
    return 0;
}
