#pragma once

// Tabular plot data: one header row, comma-separated columns, 17 significant digits.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "axial/blowup.hpp"
#include "axial/contact.hpp"
#include "axial/parabola.hpp"

namespace axial::io {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

/// branch, t, x, y, z in the plane frame (tangent, v_a, nu2).
Table branches_table(const IntersectionBranches& b);

/// y, n1, n2: samples of eta(y).
Table parabola_table(const CurvatureParabola& cp, double y_min, double y_max, int samples);

/// u, v, x, y, z on a square grid [-extent, extent]². Rejects germs of corank != 1.
Table mesh_table(const MapGerm& f, double extent, int samples, const Tolerance& tol = {});

/// r, theta, K, Ktilde on the given radii and angles.
Table blowup_table(const MapGerm& f, const std::vector<double>& radii, const std::vector<double>& thetas,
                   const Tolerance& tol = {});

/// u, p1, p2.
Table contour_table(const ContourProfile& profile);

}  // namespace axial::io
