#pragma once

// The curvature parabola eta(y) = eta0 + 2 eta1 y + eta2 y^2 in the normal plane, the
// adapted frame {v_a, nu2}, and the asymptotic directions of a corank-1 germ.

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "axial/normalization.hpp"

namespace axial {

struct CurvatureParabola {
    Eigen::Vector2d eta0 = Eigen::Vector2d::Zero();  ///< (a20, b20)
    Eigen::Vector2d eta1 = Eigen::Vector2d::Zero();  ///< (a11, b11)
    Eigen::Vector2d eta2 = Eigen::Vector2d::Zero();  ///< (a02, b02)
    ParabolaClass cls = ParabolaClass::PointOrigin;
    double scale = 0.0;  ///< largest 2-jet coefficient, for tolerances

    Eigen::Vector2d operator()(double y) const { return eta0 + 2.0 * y * eta1 + y * y * eta2; }
    Eigen::Vector2d derivative(double y) const { return 2.0 * eta1 + 2.0 * y * eta2; }
};

CurvatureParabola curvature_parabola(const MongeCoefficients& m, const Tolerance& tol = {});

struct AxialFrame {
    Eigen::Vector2d v_a = Eigen::Vector2d::UnitX();
    Eigen::Vector2d nu2 = Eigen::Vector2d::UnitY();
    /// False for a parabola collapsed to the origin: every frame is adapted there.
    bool defined = false;
};

AxialFrame axial_vector(const CurvatureParabola& cp);

/// Lifts a normal-plane vector (y,z) to (0,y,z) in the Monge frame.
inline Eigen::Vector3d lift(const Eigen::Vector2d& w) { return {0.0, w.x(), w.y()}; }

struct AsymptoticSet {
    enum class Kind { Finite, IncludesInfinity, All };
    Kind kind = Kind::Finite;
    std::vector<double> roots;  ///< finite parameters y, ascending

    /// Number of directions, counting y_inf; -1 when every direction is asymptotic.
    int count() const noexcept;
};

std::string_view to_string(AsymptoticSet::Kind k) noexcept;

/// Directions y with eta(y) and eta'(y) collinear, plus y_inf for degenerate parabolas.
AsymptoticSet asymptotic_directions(const CurvatureParabola& cp, const Tolerance& tol = {});

enum class PointType { Elliptic, Hyperbolic, Parabolic, Inflection };

std::string_view to_string(PointType t) noexcept;

PointType point_type(const AsymptoticSet& as);

}  // namespace axial
