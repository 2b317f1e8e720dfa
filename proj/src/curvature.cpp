#include "axial/curvature.hpp"

#include <array>
#include <cmath>
#include <string>

#include "axial/errors.hpp"

namespace axial {

std::string_view to_string(CurvatureValue::Kind k) noexcept {
    switch (k) {
        case CurvatureValue::Kind::Finite: return "Finite";
        case CurvatureValue::Kind::Unbounded: return "Unbounded";
        case CurvatureValue::Kind::ZeroByDefinition: return "ZeroByDefinition";
        case CurvatureValue::Kind::Undefined: return "Undefined";
    }
    return "?";
}

CurvatureValue kappa_a_monge(const MongeCoefficients& m, const Tolerance& tol) {
    switch (classify_2jet(m, tol)) {
        case ParabolaClass::Line: return CurvatureValue::unbounded();
        case ParabolaClass::PointNonOrigin:
        case ParabolaClass::PointOrigin: return CurvatureValue::zero_by_definition();
        default: break;
    }
    const double rho2 = m.a02 * m.a02 + m.b02 * m.b02;
    const double a = m.a20 * m.a02 + m.b20 * m.b02;
    const double b = m.a11 * m.a02 + m.b11 * m.b02;
    return CurvatureValue::finite((a - b * b / rho2) / std::sqrt(rho2));
}

namespace {

struct SecondOrderData {
    Eigen::Vector3d fu, fuu, fuv, fvv;
};

SecondOrderData kernel_aligned_data(const MapGerm& f, const Tolerance& tol) {
    const Eigen::Vector3d fu = f.derivative(1, 0);
    const Eigen::Vector3d fv = f.derivative(0, 1);
    if (fu.norm() <= tol.tau(0.0)) throw PreconditionError("f_u(0) = 0: not a corank-1 coordinate system");
    if (fv.norm() > tol.tau(fu.norm())) throw PreconditionError("kernel not aligned with ∂_v: f_v(0) != 0");
    SecondOrderData d{fu, f.derivative(2, 0), f.derivative(1, 1), f.derivative(0, 2)};
    if (fu.cross(d.fvv).norm() <= tol.tau(fu.norm() * d.fvv.norm())) {
        throw DegeneracyError("degenerate second-order data: f_vv(0) parallel to f_u(0)");
    }
    return d;
}

}  // namespace

CurvatureValue kappa_a_general(const MapGerm& f, const Tolerance& tol) {
    const SecondOrderData d = kernel_aligned_data(f, tol);
    const double e = d.fu.dot(d.fu);
    const double u_uu = d.fu.dot(d.fuu), u_uv = d.fu.dot(d.fuv), u_vv = d.fu.dot(d.fvv);
    const double uu_vv = d.fuu.dot(d.fvv), uv_vv = d.fuv.dot(d.fvv), vv_vv = d.fvv.dot(d.fvv);

    const double first = (u_uu * u_vv - e * uu_vv) * (u_vv * u_vv - e * vv_vv);
    const double second = u_uv * u_vv - e * uv_vv;
    const double denom = std::pow(e * (e * vv_vv - u_vv * u_vv), 1.5);
    return CurvatureValue::finite((first - second * second) / denom);
}

CurvatureValue kappa_a_intrinsic(const MapGerm& f, const Tolerance& tol) {
    kernel_aligned_data(f, tol);
    const PolyVec3 fu = f.partial(1, 0);
    const PolyVec3 fv = f.partial(0, 1);
    const TruncatedPoly2 E = dot(fu, fu), F = dot(fu, fv), G = dot(fv, fv);

    const double e = E.derivative_at_origin(0, 0);
    const double e_u = E.derivative_at_origin(1, 0), e_v = E.derivative_at_origin(0, 1);
    const double e_vv = E.derivative_at_origin(0, 2);
    const double f_v = F.derivative_at_origin(0, 1), f_uv = F.derivative_at_origin(1, 1);
    const double g_uv = G.derivative_at_origin(1, 1), g_vv = G.derivative_at_origin(0, 2);

    const double base = e * (e * g_vv / 2.0 - f_v * f_v);
    if (base <= tol.tau(std::abs(e * e * g_vv))) {
        throw DegeneracyError("degenerate second-order data: E(E G_vv/2 - F_v^2) vanishes");
    }
    const double p = (e_u / 2.0 * f_v - e * (f_uv - e_vv / 2.0)) * (f_v * f_v - e * g_vv / 2.0);
    const double q = e_v / 2.0 * f_v - e * g_uv / 2.0;
    return CurvatureValue::finite((p - q * q) / std::pow(base, 1.5));
}

CurvatureValue kappa_a_oracle(const CurvatureParabola& cp, const AxialFrame& frame) {
    const auto k = [&](double y) { return cp(y).dot(frame.v_a); };
    const double k2 = cp.eta2.dot(frame.v_a);
    const double k1 = cp.eta1.dot(frame.v_a);
    const double flat = 1e-14 * (1.0 + cp.scale);
    if (!frame.defined || (std::abs(k2) <= flat && std::abs(k1) <= flat)) {
        return CurvatureValue::zero_by_definition();
    }
    if (k2 < -flat || std::abs(k2) <= flat) return CurvatureValue::unbounded();

    // Dense sampling locates the basin, golden-section search refines it.
    constexpr int samples = 20001;
    double half_width = 1e3;
    for (int attempt = 0; attempt < 12; ++attempt, half_width *= 10.0) {
        const double step = 2.0 * half_width / (samples - 1);
        int best = 0;
        double best_val = k(-half_width);
        for (int i = 1; i < samples; ++i) {
            const double val = k(-half_width + i * step);
            if (val < best_val) {
                best_val = val;
                best = i;
            }
        }
        if (best == 0 || best == samples - 1) continue;

        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double lo = -half_width + (best - 1) * step, hi = -half_width + (best + 1) * step;
        double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
        double fc = k(c), fd = k(d);
        while (hi - lo > 1e-10 * (1.0 + std::abs(lo))) {
            if (fc < fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - invphi * (hi - lo);
                fc = k(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + invphi * (hi - lo);
                fd = k(d);
            }
        }
        return CurvatureValue::finite(k(0.5 * (lo + hi)));
    }
    throw DegeneracyError("axial curvature oracle: minimum not bracketed");
}

double kappa_a_special(const MapGerm& s) {
    const Eigen::Vector3d fvv = s.derivative(0, 2);
    const double m = s.derivative(1, 1).dot(fvv);
    return s.derivative(2, 0).dot(fvv) - m * m;
}

double kappa_u_signed(const CurvatureParabola& cp, const AxialFrame& frame) {
    return cp.eta0.dot(frame.nu2);
}

CurvatureValue kappa_u(const CurvatureParabola& cp, const AxialFrame& frame, const Tolerance& tol) {
    if (cp.cls == ParabolaClass::NonDegenerateParabola) return CurvatureValue::undefined();
    if (!frame.defined) return CurvatureValue::finite(0.0);
    const double k0 = std::abs(cp(0.0).dot(frame.nu2));
    for (double y : {-2.0, -1.0, 1.0, 2.0}) {
        const double ky = std::abs(cp(y).dot(frame.nu2));
        if (std::abs(ky - k0) > tol.tau(cp.scale) * (1.0 + y * y)) {
            throw DegeneracyError("umbilic curvature: projection on nu2 is not constant along the parabola");
        }
    }
    return CurvatureValue::finite(k0);
}

FrontalityReport frontality_of_components(const TruncatedPoly2& f2, const TruncatedPoly2& f3, const Tolerance& tol) {
    const int n = f2.order();
    if (n < 3) throw PreconditionError("under-resolved jet: frontality needs order >= 3");
    const double scale = std::max(f2.max_abs_coeff(2), f3.max_abs_coeff(2));
    const TruncatedPoly2 f2v = poly_diff(f2, Var::v);
    if (std::abs(f2v.coeff(0, 1)) <= tol.tau(scale)) {
        throw PreconditionError("swap components or not a fold: (f2)_vv(0,0) = 0");
    }
    if (std::abs(f2v.coeff(0, 0)) > tol.tau(scale)) {
        throw PreconditionError("frontality needs (f2)_v(0,0) = 0");
    }
    TruncatedPoly2 f2v0 = f2v;
    f2v0.set_coeff(0, 0, 0.0);

    FrontalityReport r;
    r.critical_curve = implicit_curve(f2v0);
    const TruncatedPoly2 series = compose(poly_diff(f3, Var::v), TruncatedPoly2::variable(n, Var::u), r.critical_curve);
    r.certified_order = n - 1;
    r.obstruction_series = TruncatedPoly2(n);
    for (int i = 0; i <= n - 1; ++i) r.obstruction_series.set_coeff(i, 0, series.coeff(i, 0));
    r.is_frontal = r.obstruction_series.max_abs_coeff() <= tol.tau(scale);
    r.kappa_f = 2.0 * r.obstruction_series.coeff(2, 0);
    return r;
}

FrontalityReport frontality(const MapGerm& f, const Tolerance& tol) {
    const FoldNormalForm fnf = fold_normal_form(f, tol);
    FrontalityReport r = frontality_of_components(fnf.germ[1], fnf.germ[2], tol);
    r.kappa_f = fnf.b1_0;
    return r;
}

MapGerm adapted_coordinates(const MapGerm& f, const Tolerance& tol) {
    const FoldNormalForm fnf = fold_normal_form(f, tol);
    const FrontalityReport r = frontality_of_components(fnf.germ[1], fnf.germ[2], tol);
    if (!r.is_frontal) {
        throw PreconditionError("not a frontal to order " + std::to_string(r.certified_order));
    }
    const int n = f.order();
    return germ_compose(fnf.germ, SourceChange(TruncatedPoly2::variable(n, Var::u),
                                               TruncatedPoly2::variable(n, Var::v) + r.critical_curve));
}

SingularCurvature kappa_s_frontal(const MapGerm& f, const Tolerance& tol) {
    const int n = f.order();
    const PolyVec3 fv = f.partial(0, 1);
    const double scale = f.scale(n);
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < n; ++i) {
            if (std::abs(fv[k].coeff(i, 0)) > tol.tau(scale)) {
                throw PreconditionError("not in adapted coordinates: f_v does not vanish along the u-axis");
            }
        }
    }
    if (!frontality(f, tol).is_frontal) throw PreconditionError("not a frontal");

    const Eigen::Vector3d fu = f.derivative(1, 0), fuu = f.derivative(2, 0), fvv = f.derivative(0, 2);
    const Eigen::Vector3d normal = fu.cross(fvv);
    if (normal.norm() <= tol.tau(fu.norm() * fvv.norm())) {
        throw DegeneracyError("degenerate singular point: λ_v(0) = 0");
    }
    const Eigen::Vector3d nu = normal.normalized();
    const TruncatedPoly2 lambda = dot(cross(f.partial(1, 0), fv), nu);
    const double lambda_v = lambda.coeff(0, 1);
    if (std::abs(lambda_v) <= tol.tau(fu.norm() * fvv.norm())) {
        throw DegeneracyError("degenerate singular point: λ_v(0) = 0");
    }
    SingularCurvature s;
    s.lambda_v_sign = lambda_v > 0 ? 1 : -1;
    const double det = fu.dot(fuu.cross(nu));
    s.kappa_s = CurvatureValue::finite(s.lambda_v_sign * det / std::pow(fu.norm(), 3));
    return s;
}

}  // namespace axial
