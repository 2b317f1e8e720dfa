#include "axial/io/export.hpp"

#include <fmt/format.h>

#include "axial/errors.hpp"

namespace axial::io {

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t k = 0; k < columns.size(); ++k) out += (k ? "," : "") + columns[k];
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out += fmt::format("{}{:.17g}", k ? "," : "", row[k]);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json Table::to_json() const {
    return nlohmann::ordered_json{{"columns", columns}, {"rows", rows}};
}

Table branches_table(const IntersectionBranches& b) {
    Table t{{"branch", "t", "x", "y", "z"}, {}};
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& s = b.branches[k].samples;
        for (std::size_t i = 0; i < s.size(); ++i) {
            t.rows.push_back({static_cast<double>(k + 1), b.sample_t[i], s[i].x(), s[i].y(), s[i].z()});
        }
    }
    return t;
}

Table parabola_table(const CurvatureParabola& cp, double y_min, double y_max, int samples) {
    if (samples < 2) throw PreconditionError("parabola export needs at least two samples");
    Table t{{"y", "n1", "n2"}, {}};
    for (int i = 0; i < samples; ++i) {
        const double y = y_min + (y_max - y_min) * i / (samples - 1);
        const Eigen::Vector2d e = cp(y);
        t.rows.push_back({y, e.x(), e.y()});
    }
    return t;
}

Table mesh_table(const MapGerm& f, double extent, int samples, const Tolerance& tol) {
    const int corank = corank_at_origin(f, tol);
    if (corank != 1) throw PreconditionError(fmt::format("mesh export needs a corank-1 germ; corank is {}", corank));
    if (samples < 2) throw PreconditionError("mesh export needs at least two samples per axis");
    Table t{{"u", "v", "x", "y", "z"}, {}};
    for (int i = 0; i < samples; ++i) {
        const double u = -extent + 2.0 * extent * i / (samples - 1);
        for (int j = 0; j < samples; ++j) {
            const double v = -extent + 2.0 * extent * j / (samples - 1);
            const Eigen::Vector3d p = f.eval(u, v);
            t.rows.push_back({u, v, p.x(), p.y(), p.z()});
        }
    }
    return t;
}

Table blowup_table(const MapGerm& f, const std::vector<double>& radii, const std::vector<double>& thetas,
                   const Tolerance& tol) {
    const FoldNormalForm fnf = fold_normal_form(f, tol);
    Table t{{"r", "theta", "K", "Ktilde"}, {}};
    for (double r : radii) {
        for (double th : thetas) {
            const BlowupSample s = blowup_gauss(fnf, r, th, {}, tol);
            t.rows.push_back({r, th, s.K, ktilde(fnf, fnf.a0_0, fnf.b0_0, th).value});
        }
    }
    return t;
}

Table contour_table(const ContourProfile& profile) {
    Table t{{"u", "p1", "p2"}, {}};
    for (const auto& s : profile.samples) t.rows.push_back({s[0], s[1], s[2]});
    return t;
}

}  // namespace axial::io
