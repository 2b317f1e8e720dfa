#pragma once

// Corank detection, Monge normalization f = (u, f2, f3), the 2-jet classification of the
// curvature parabola, and the fold normal form used by the blow-up analysis.

#include <string_view>

#include <Eigen/Dense>

#include "axial/jet.hpp"
#include "axial/tolerance.hpp"

namespace axial {

enum class ParabolaClass { NonDegenerateParabola, HalfLine, Line, PointNonOrigin, PointOrigin };

std::string_view to_string(ParabolaClass c) noexcept;

inline bool is_point(ParabolaClass c) noexcept {
    return c == ParabolaClass::PointNonOrigin || c == ParabolaClass::PointOrigin;
}
inline bool is_degenerate(ParabolaClass c) noexcept { return c != ParabolaClass::NonDegenerateParabola; }

/// Coefficients of j²f(0) = (u, (a20 u² + 2 a11 uv + a02 v²)/2, (b20 u² + 2 b11 uv + b02 v²)/2).
struct MongeCoefficients {
    double a20 = 0, a11 = 0, a02 = 0;
    double b20 = 0, b11 = 0, b02 = 0;

    double scale() const noexcept;
    friend bool operator==(const MongeCoefficients&, const MongeCoefficients&) = default;
};

/// Reads the 2-jet coefficients of a germ already in Monge form.
MongeCoefficients monge_coefficients(const MapGerm& monge_germ);

struct MongeData {
    MongeCoefficients coeffs;
    /// g = rotation · (f ∘ source), with g = (u, g2, g3) and j¹g2 = j¹g3 = 0.
    MapGerm germ;
    Eigen::Matrix3d rotation;
    SourceChange source;
};

/// 2 - rank df(0), with the rank decided on singular values.
int corank_at_origin(const MapGerm& f, const Tolerance& tol = {});

/// Throws PreconditionError unless corank_at_origin(f) == 1.
MongeData to_monge_form(const MapGerm& f, const Tolerance& tol = {});

ParabolaClass classify_2jet(const MongeCoefficients& m, const Tolerance& tol = {});

/// Germ of the shape (u, u²a0(u)/2 + u^k v a1(u)/2 + v²a2(u,v)/2,
///                    u²b0(u)/2 + u²v b1(u)/2 + uv²b3(u)/2 + v³b4(u,v)/6), a2(0,0) = 1,
/// with k beyond the jet order: (f2)_v vanishes on the u-axis.
struct FoldNormalForm {
    double a0_0 = 0;   ///< a0(0), equal to the axial curvature
    double b0_0 = 0;   ///< b0(0), the signed umbilic curvature
    double b1_0 = 0;   ///< b1(0), the first frontality obstruction
    double a2_00 = 1;  ///< a2(0,0)
    MapGerm germ;
};

/// Requires a half-line parabola (j²f ~ (u,v²,0)) and jet order >= 3.
FoldNormalForm fold_normal_form(const MapGerm& f, const Tolerance& tol = {});

/// Rotation of the normal plane (y,z) by angle, lifted to R^3 (fixes the x axis).
Eigen::Matrix3d normal_plane_rotation(double angle);

/// Germ of the Monge form with v rescaled so that |f_vv(0)| = 1: the coordinates in which
/// |f_u| = |f_vv| = 1, f_v = 0 and <f_u, f_vv> = 0 at the origin.
MapGerm special_coordinates(const MongeData& m);

}  // namespace axial
