#include "axial/normalization.hpp"

#include <algorithm>
#include <cmath>

#include "axial/errors.hpp"

namespace axial {

std::string_view to_string(ParabolaClass c) noexcept {
    switch (c) {
        case ParabolaClass::NonDegenerateParabola: return "NonDegenerateParabola";
        case ParabolaClass::HalfLine: return "HalfLine";
        case ParabolaClass::Line: return "Line";
        case ParabolaClass::PointNonOrigin: return "PointNonOrigin";
        case ParabolaClass::PointOrigin: return "PointOrigin";
    }
    return "?";
}

double MongeCoefficients::scale() const noexcept {
    return std::max({std::abs(a20), std::abs(a11), std::abs(a02), std::abs(b20), std::abs(b11),
                     std::abs(b02)});
}

MongeCoefficients monge_coefficients(const MapGerm& g) {
    MongeCoefficients m;
    m.a20 = 2.0 * g[1].coeff(2, 0);
    m.a11 = g[1].coeff(1, 1);
    m.a02 = 2.0 * g[1].coeff(0, 2);
    m.b20 = 2.0 * g[2].coeff(2, 0);
    m.b11 = g[2].coeff(1, 1);
    m.b02 = 2.0 * g[2].coeff(0, 2);
    return m;
}

namespace {

Eigen::Matrix<double, 3, 2> differential(const MapGerm& f) {
    Eigen::Matrix<double, 3, 2> df;
    df.col(0) = f.derivative(1, 0);
    df.col(1) = f.derivative(0, 1);
    return df;
}

int rank_of(const Eigen::Vector2d& singular_values, const Tolerance& tol) {
    const double t = tol.tau(singular_values(0));
    return static_cast<int>(singular_values(0) > t) + static_cast<int>(singular_values(1) > t);
}

// Completes the unit tangent e1 to a positively oriented orthonormal frame, staying as
// close as possible to the ambient axes so that germs already in Monge form are untouched.
Eigen::Matrix3d frame_from_tangent(const Eigen::Vector3d& e1) {
    Eigen::Vector3d seed = Eigen::Vector3d::UnitY();
    if (std::abs(seed.dot(e1)) > 0.9) seed = Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d e2 = (seed - seed.dot(e1) * e1).normalized();
    const Eigen::Vector3d e3 = e1.cross(e2);
    Eigen::Matrix3d r;
    r.row(0) = e1.transpose();
    r.row(1) = e2.transpose();
    r.row(2) = e3.transpose();
    return r;
}

}  // namespace

int corank_at_origin(const MapGerm& f, const Tolerance& tol) {
    if (f.order() < 1) throw PreconditionError("corank needs a jet of order >= 1");
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(differential(f));
    return 2 - rank_of(svd.singularValues(), tol);
}

MongeData to_monge_form(const MapGerm& f, const Tolerance& tol) {
    const int n = f.order();
    if (n < 1) throw PreconditionError("Monge form needs a jet of order >= 1");
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(differential(f), Eigen::ComputeFullV);
    const int corank = 2 - rank_of(svd.singularValues(), tol);
    if (corank == 0) throw PreconditionError("regular point: corank 0, the germ is an immersion");
    if (corank == 2) throw PreconditionError("corank 2 singularity: df(0) = 0");

    // Kernel direction k becomes ∂_v; w completes a rotation of the source plane.
    Eigen::Vector2d k = svd.matrixV().col(1);
    const bool flip = std::abs(k.y()) > 1e-12 ? k.y() < 0.0 : k.x() < 0.0;
    if (flip) k = -k;
    Eigen::Matrix2d q;
    q.col(0) = Eigen::Vector2d(k.y(), -k.x());
    q.col(1) = k;
    const SourceChange linear = SourceChange::linear(n, q);
    const MapGerm g0 = germ_compose(f, linear);

    const Eigen::Vector3d fu = g0.derivative(1, 0);
    const double length = fu.norm();
    const Eigen::Matrix3d rotation = frame_from_tangent(fu / length);
    const MapGerm g1 = germ_rotate(g0, rotation);

    // Flatten the first component: find phi with g1_x(phi(u,v), v) = u, one jet order per pass.
    TruncatedPoly2 rest = g1[0];
    rest.set_coeff(1, 0, 0.0);
    rest.set_coeff(0, 1, 0.0);
    const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u);
    const TruncatedPoly2 v = TruncatedPoly2::variable(n, Var::v);
    TruncatedPoly2 phi = u * (1.0 / length);
    for (int pass = 0; pass < n; ++pass) phi = (u - compose(rest, phi, v)) * (1.0 / length);
    const SourceChange flatten(phi, v);
    const MapGerm g2 = germ_compose(g1, flatten);

    // The remaining linear parts vanish up to rounding; make the shape exact.
    const double residual = std::max({(g2[0] - u).max_abs_coeff(), std::abs(g2[1].coeff(1, 0)),
                                      std::abs(g2[1].coeff(0, 1)), std::abs(g2[2].coeff(1, 0)),
                                      std::abs(g2[2].coeff(0, 1))});
    if (residual > 1e-6 * (1.0 + f.scale(n))) {
        throw DegeneracyError("Monge normalization did not converge (residual " + std::to_string(residual) + ")");
    }
    TruncatedPoly2 y = g2[1], z = g2[2];
    for (TruncatedPoly2* p : {&y, &z}) {
        p->set_coeff(1, 0, 0.0);
        p->set_coeff(0, 1, 0.0);
    }
    MapGerm germ(u, std::move(y), std::move(z));
    MongeCoefficients coeffs = monge_coefficients(germ);
    return MongeData{coeffs, std::move(germ), rotation, linear.after(flatten)};
}

ParabolaClass classify_2jet(const MongeCoefficients& m, const Tolerance& tol) {
    const double tau = tol.tau(m.scale());
    const double det = m.a11 * m.b02 - m.a02 * m.b11;
    if (std::abs(det) > tau) return ParabolaClass::NonDegenerateParabola;
    if (m.a02 * m.a02 + m.b02 * m.b02 > tau * tau) return ParabolaClass::HalfLine;
    if (m.a11 * m.a11 + m.b11 * m.b11 > tau * tau) return ParabolaClass::Line;
    if (m.a20 * m.a20 + m.b20 * m.b20 > tau * tau) return ParabolaClass::PointNonOrigin;
    return ParabolaClass::PointOrigin;
}

Eigen::Matrix3d normal_plane_rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d r;
    r << 1, 0, 0, 0, c, -s, 0, s, c;
    return r;
}

FoldNormalForm fold_normal_form(const MapGerm& f, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const ParabolaClass cls = classify_2jet(md.coeffs, tol);
    if (cls != ParabolaClass::HalfLine) {
        throw PreconditionError("fold normal form needs j²f ~ (u,v²,0); parabola class is " +
                                std::string(to_string(cls)));
    }
    const int n = md.germ.order();
    if (n < 3) throw PreconditionError("under-resolved jet: fold normal form needs order >= 3");

    const MongeCoefficients& m = md.coeffs;
    const double rho = std::hypot(m.a02, m.b02);
    const MapGerm aligned = germ_rotate(md.germ, normal_plane_rotation(-std::atan2(m.b02, m.a02)));
    const double shear = aligned[1].coeff(1, 1) / rho;  // a11 after alignment, over a02 = rho

    TruncatedPoly2 y = TruncatedPoly2::variable(n, Var::v) * (1.0 / std::sqrt(rho));
    y.set_coeff(1, 0, -shear);
    const MapGerm sheared = germ_compose(aligned, SourceChange(TruncatedPoly2::variable(n, Var::u), y));

    // Move the critical curve of the second component onto the u-axis, pushing the
    // u^k v terms of that component beyond the retained order.
    const TruncatedPoly2 crit = implicit_curve(poly_diff(sheared[1], Var::v));
    const MapGerm g = germ_compose(
        sheared, SourceChange(TruncatedPoly2::variable(n, Var::u), TruncatedPoly2::variable(n, Var::v) + crit));

    FoldNormalForm out{2.0 * g[1].coeff(2, 0), 2.0 * g[2].coeff(2, 0), 2.0 * g[2].coeff(2, 1),
                       2.0 * g[1].coeff(0, 2), g};
    return out;
}

MapGerm special_coordinates(const MongeData& m) {
    const double rho = std::hypot(m.coeffs.a02, m.coeffs.b02);
    if (rho <= Tolerance{}.tau(m.coeffs.scale())) {
        throw PreconditionError("special coordinates need f_vv(0) transverse to f_u(0)");
    }
    const int n = m.germ.order();
    const SourceChange s(TruncatedPoly2::variable(n, Var::u),
                         TruncatedPoly2::variable(n, Var::v) * (1.0 / std::sqrt(rho)));
    return germ_compose(m.germ, s);
}

}  // namespace axial
