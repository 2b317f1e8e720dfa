#include "axial/parabola.hpp"

#include <cmath>

namespace axial {

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

Eigen::Vector2d rot90(const Eigen::Vector2d& w) { return {-w.y(), w.x()}; }

}  // namespace

CurvatureParabola curvature_parabola(const MongeCoefficients& m, const Tolerance& tol) {
    CurvatureParabola cp;
    cp.eta0 = {m.a20, m.b20};
    cp.eta1 = {m.a11, m.b11};
    cp.eta2 = {m.a02, m.b02};
    cp.cls = classify_2jet(m, tol);
    cp.scale = m.scale();
    return cp;
}

AxialFrame axial_vector(const CurvatureParabola& cp) {
    AxialFrame fr;
    switch (cp.cls) {
        case ParabolaClass::NonDegenerateParabola:
        case ParabolaClass::HalfLine: fr.v_a = cp.eta2.normalized(); break;
        case ParabolaClass::Line: fr.v_a = cp.eta1.normalized(); break;
        case ParabolaClass::PointNonOrigin: fr.v_a = rot90(cp.eta0).normalized(); break;
        case ParabolaClass::PointOrigin: return fr;
    }
    fr.nu2 = rot90(fr.v_a);
    fr.defined = true;
    return fr;
}

int AsymptoticSet::count() const noexcept {
    switch (kind) {
        case Kind::Finite: return static_cast<int>(roots.size());
        case Kind::IncludesInfinity: return static_cast<int>(roots.size()) + 1;
        case Kind::All: return -1;
    }
    return -1;
}

std::string_view to_string(AsymptoticSet::Kind k) noexcept {
    switch (k) {
        case AsymptoticSet::Kind::Finite: return "Finite";
        case AsymptoticSet::Kind::IncludesInfinity: return "IncludesInfinity";
        case AsymptoticSet::Kind::All: return "All";
    }
    return "?";
}

AsymptoticSet asymptotic_directions(const CurvatureParabola& cp, const Tolerance& tol) {
    using Kind = AsymptoticSet::Kind;
    const double tau = tol.tau(cp.scale);
    // eta x eta' = 2 (q2 y^2 + q1 y + q0)
    const double q2 = cross2(cp.eta1, cp.eta2);
    const double q1 = cross2(cp.eta0, cp.eta2);
    const double q0 = cross2(cp.eta0, cp.eta1);

    switch (cp.cls) {
        case ParabolaClass::NonDegenerateParabola: {
            const double disc = q1 * q1 - 4.0 * q2 * q0;
            if (disc < -tau * tau) return {Kind::Finite, {}};
            if (disc <= tau * tau) return {Kind::Finite, {-q1 / (2.0 * q2)}};
            // Stable form of the two roots.
            const double s = std::sqrt(disc);
            const double q = -0.5 * (q1 + std::copysign(s, q1));
            double r1 = q / q2, r2 = q0 / q;
            if (r1 > r2) std::swap(r1, r2);
            return {Kind::Finite, {r1, r2}};
        }
        case ParabolaClass::HalfLine: {
            const double n2 = cp.eta2.norm();
            if (std::abs(q1) / n2 <= tau) return {Kind::All, {}};
            return {Kind::IncludesInfinity, {-cp.eta1.dot(cp.eta2) / cp.eta2.squaredNorm()}};
        }
        case ParabolaClass::Line: {
            if (std::abs(q0) / cp.eta1.norm() <= tau) return {Kind::All, {}};
            return {Kind::IncludesInfinity, {}};
        }
        case ParabolaClass::PointNonOrigin:
        case ParabolaClass::PointOrigin: return {Kind::All, {}};
    }
    return {Kind::All, {}};
}

std::string_view to_string(PointType t) noexcept {
    switch (t) {
        case PointType::Elliptic: return "Elliptic";
        case PointType::Hyperbolic: return "Hyperbolic";
        case PointType::Parabolic: return "Parabolic";
        case PointType::Inflection: return "Inflection";
    }
    return "?";
}

PointType point_type(const AsymptoticSet& as) {
    switch (as.count()) {
        case 0: return PointType::Elliptic;
        case 1: return PointType::Parabolic;
        case 2: return PointType::Hyperbolic;
        default: return PointType::Inflection;
    }
}

}  // namespace axial
