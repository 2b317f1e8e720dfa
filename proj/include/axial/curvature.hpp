#pragma once

// Axial curvature (four independent routes), umbilic curvature, singular curvature of
// frontals, and the frontality test for fold germs.

#include <string_view>

#include "axial/jet.hpp"
#include "axial/normalization.hpp"
#include "axial/parabola.hpp"
#include "axial/tolerance.hpp"

namespace axial {

struct CurvatureValue {
    enum class Kind { Finite, Unbounded, ZeroByDefinition, Undefined };
    Kind kind = Kind::Undefined;
    double value = 0.0;

    static CurvatureValue finite(double v) { return {Kind::Finite, v}; }
    static CurvatureValue unbounded() { return {Kind::Unbounded, 0.0}; }
    static CurvatureValue zero_by_definition() { return {Kind::ZeroByDefinition, 0.0}; }
    static CurvatureValue undefined() { return {Kind::Undefined, 0.0}; }

    /// Finite values and the definitional zero carry a number.
    bool has_value() const noexcept { return kind == Kind::Finite || kind == Kind::ZeroByDefinition; }
};

std::string_view to_string(CurvatureValue::Kind k) noexcept;

/// Closed form from the Monge coefficients (minimum of <eta(y), v_a> at the vertex).
CurvatureValue kappa_a_monge(const MongeCoefficients& m, const Tolerance& tol = {});

/// Coordinate-free formula in f_u, f_uu, f_uv, f_vv. Needs f_v(0) = 0 and f_u(0) != 0.
CurvatureValue kappa_a_general(const MapGerm& f, const Tolerance& tol = {});

/// The same quantity through E, F, G and their partials only.
CurvatureValue kappa_a_intrinsic(const MapGerm& f, const Tolerance& tol = {});

/// Direct minimization of <eta(y), v_a> over y.
CurvatureValue kappa_a_oracle(const CurvatureParabola& cp, const AxialFrame& frame);

/// <f_uu, f_vv> - <f_uv, f_vv>^2 for a germ with |f_u| = |f_vv| = 1, f_v = 0, f_u ⟂ f_vv.
double kappa_a_special(const MapGerm& special);

/// |<eta(y), nu2>|; defined only for degenerate parabolas.
CurvatureValue kappa_u(const CurvatureParabola& cp, const AxialFrame& frame, const Tolerance& tol = {});

/// Signed <eta0, nu2>, for degenerate parabolas.
double kappa_u_signed(const CurvatureParabola& cp, const AxialFrame& frame);

struct FrontalityReport {
    bool is_frontal = false;
    /// Order through which the obstruction series is exact.
    int certified_order = 0;
    /// (f3)_v(u, v(u)) in the fold normal form, a series in u.
    TruncatedPoly2 obstruction_series;
    /// v(u) solving (f2)_v(u, v(u)) = 0.
    TruncatedPoly2 critical_curve;
    double kappa_f = 0.0;  ///< b1(0)
};

/// Works on raw components (u, f2, f3): f2 must have (f2)_vv(0,0) != 0.
FrontalityReport frontality_of_components(const TruncatedPoly2& f2, const TruncatedPoly2& f3,
                                          const Tolerance& tol = {});

/// Normalizes to the fold normal form first; requires a half-line parabola.
FrontalityReport frontality(const MapGerm& f, const Tolerance& tol = {});

/// Coordinates in which the singular set is the u-axis and ∂_v spans the kernel along it.
/// Requires a fold germ that is frontal to the retained order.
MapGerm adapted_coordinates(const MapGerm& f, const Tolerance& tol = {});

struct SingularCurvature {
    CurvatureValue kappa_s;
    int lambda_v_sign = 0;  ///< sign of λ_v(0), λ = det(f_u, f_v, ν)
};

/// Singular curvature at the origin of a frontal given in adapted coordinates.
SingularCurvature kappa_s_frontal(const MapGerm& adapted, const Tolerance& tol = {});

}  // namespace axial
