#pragma once

// Contact of the surface with the osculating plane v_a^⊥: the height function h_{v_a},
// its singularity type, and the curves in which the surface meets the plane.

#include <array>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "axial/curvature.hpp"
#include "axial/normalization.hpp"
#include "axial/parabola.hpp"

namespace axial {

/// h = <g, lift(v_a)> for the Monge germ g.
TruncatedPoly2 height_jet(const MongeData& m, const AxialFrame& frame);

/// Hessian of h_{v_a} at the origin in the special coordinates (|f_vv| = 1).
Eigen::Matrix2d height_hessian(const MapGerm& f, const Tolerance& tol = {});

enum class HeightType { A1Plus, A1Minus, A2, AAtLeast3, Corank2 };

std::string_view to_string(HeightType t) noexcept;

HeightType height_type(const MapGerm& f, const Tolerance& tol = {});

/// True iff the surface lies locally on one side of v_a^⊥.
inline bool one_side_test(HeightType t) noexcept { return t == HeightType::A1Plus; }

/// Whether v_a is a binormal direction. Not defined for a line parabola.
bool binormal_check(const CurvatureParabola& cp, const AxialFrame& frame, const Tolerance& tol = {});

enum class BranchRelation { SameHalfPlane, OppositeHalfPlanes, ContainsLine, InflectionContact, TangentExtrema };
enum class BranchSides { Same, Opposite, Mixed, OnLine };
enum class BranchMode { VOfU, UOfV };

std::string_view to_string(BranchRelation r) noexcept;
std::string_view to_string(BranchSides s) noexcept;

struct Branch {
    double slope = 0.0;
    /// Source curve v = c(u) (mode VOfU) or u = c(v), a series in the first variable.
    TruncatedPoly2 source_series;
    /// Image in plane coordinates (tangent, v_a, nu2) as series in the curve parameter t.
    std::array<TruncatedPoly2, 3> image;
    /// nu2-coordinate written as a graph over the tangent coordinate x.
    TruncatedPoly2 height_over_x;
    int leading_order = -1;  ///< first non-negligible degree of height_over_x, -1 if none
    double leading_coeff = 0.0;
    double third_derivative = 0.0;  ///< d³/dx³ of height_over_x at 0
    std::vector<Eigen::Vector3d> samples;
};

struct IntersectionBranches {
    BranchMode mode = BranchMode::VOfU;
    std::array<Branch, 2> branches;  ///< "+" root first
    std::vector<double> sample_t;    ///< curve parameters of the samples
    BranchRelation relation = BranchRelation::SameHalfPlane;
    BranchSides sides = BranchSides::Same;
    /// For ContainsLine: whether the flat branch is a straight line to the retained order.
    bool line_exact = false;
    /// For TangentExtrema: true when both branches have local minima (in the nu2 direction).
    bool minima = false;
    double hessian_uu = 0.0, hessian_uv = 0.0, hessian_vv = 0.0;
    /// det(f_u, f_uu, f_vv) at the origin, with f_u and f_vv normalized.
    double det_u_uu_vv = 0.0;
};

/// Requires kappa_a < -tau (an A1- height function).
IntersectionBranches intersection_branches(const MapGerm& f, int samples = 41, double t_max = 0.1,
                                           const Tolerance& tol = {});

enum class CrossCapType { EllipticCC, HyperbolicCC, ParabolicCC };

std::string_view to_string(CrossCapType t) noexcept;

CrossCapType crosscap_type(const MapGerm& f, const Tolerance& tol = {});

enum class CuspidalContact { Hyperbolic, Inflection };

std::string_view to_string(CuspidalContact c) noexcept;

struct CuspidalEdgeContact {
    CuspidalContact kind = CuspidalContact::Hyperbolic;
    double det_u_uu_vv = 0.0;
    /// (a+)'''(0), (a-)'''(0): third derivatives of the branches' nu2-coordinates.
    double a_plus_3 = 0.0, a_minus_3 = 0.0;
    IntersectionBranches branches;
};

/// Frontal half-line germ with kappa_a < -tau.
CuspidalEdgeContact cuspidal_edge_contact(const MapGerm& f, const Tolerance& tol = {});

}  // namespace axial
