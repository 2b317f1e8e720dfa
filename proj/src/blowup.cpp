#include "axial/blowup.hpp"

#include <cmath>
#include <string>

#include "axial/errors.hpp"

namespace axial {

std::array<double, 2> blowup_point(double r, double theta) {
    const double c = std::cos(theta);
    return {r * c, r * r * c * std::sin(theta) / 2.0};
}

BlowupSample blowup_gauss(const MapGerm& f, double r, double theta, const BlowupOptions& opt, const Tolerance& tol) {
    return blowup_gauss(fold_normal_form(f, tol), r, theta, opt, tol);
}

BlowupSample blowup_gauss(const FoldNormalForm& fnf, double r, double theta, const BlowupOptions& opt,
                          const Tolerance& tol) {
    const MapGerm& g = fnf.germ;
    if (g.order() < opt.min_order) {
        throw PreconditionError("under-resolved jet: blow-up needs order >= " + std::to_string(opt.min_order));
    }
    if (std::abs(fnf.b1_0) <= tol.tau(g.scale(3))) throw PreconditionError("blow-up needs b1(0) != 0");
    if (std::abs(std::cos(theta)) < opt.cos_margin) {
        throw PreconditionError("theta inside the excluded band around cos(theta) = 0");
    }
    if (!(r > 0.0) || r > opt.r_max) throw PreconditionError("blow-up radius outside (0, r_max]");

    const auto [u, v] = blowup_point(r, theta);
    const Eigen::Vector3d fu = g.partial(1, 0).eval(u, v), fv = g.partial(0, 1).eval(u, v);
    const Eigen::Vector3d fuu = g.partial(2, 0).eval(u, v), fuv = g.partial(1, 1).eval(u, v),
                          fvv = g.partial(0, 2).eval(u, v);
    const Eigen::Vector3d n = fu.cross(fv);
    const double n2 = n.squaredNorm();
    if (n2 == 0.0) throw DegeneracyError("blow-up point lies on the singular set");
    // With the unnormalized normal, (LN - M²)/(EG - F²) carries an extra |n|², and EG - F² = |n|².
    const double l = fuu.dot(n), m = fuv.dot(n), nn = fvv.dot(n);
    return {r, theta, (l * nn - m * m) / (n2 * n2)};
}

double normalized_blowup(const FoldNormalForm& fnf, const BlowupSample& s) {
    const double c = std::cos(s.theta), sn = std::sin(s.theta);
    const double w = fnf.b1_0 * fnf.b1_0 * c * c + fnf.a2_00 * fnf.a2_00 * sn * sn;
    return s.K * std::pow(s.r, 4) * c * w * w / 4.0;
}

KTildeValue ktilde(const FoldNormalForm& fnf, double kappa_a, double kappa_u, double theta) {
    const double b1 = fnf.b1_0;
    return {theta, b1 * (kappa_a * b1 * std::cos(theta) - kappa_u * std::sin(theta))};
}

BlowupLimit blowup_limit(const FoldNormalForm& fnf, double theta, double r, const BlowupOptions& opt,
                         const Tolerance& tol) {
    BlowupLimit out;
    for (std::size_t k = 0; k < 3; ++k) {
        out.radii[k] = r / std::pow(10.0, static_cast<double>(k));
        out.values[k] = normalized_blowup(fnf, blowup_gauss(fnf, out.radii[k], theta, opt, tol));
    }
    // q(r) = L + C r + O(r²): eliminate C between the two smallest radii.
    out.limit = out.values[2] + (out.values[2] - out.values[1]) / 9.0;
    return out;
}

ContourProfile koenderink_profile(const MapGerm& f, double phi, int samples, double u_max, const Tolerance& tol) {
    const double c = std::cos(phi), s = std::sin(phi);
    if (std::abs(s) <= tol.tau(0.0)) throw PreconditionError("contour profile needs sin(phi) != 0");
    if (samples < 1) throw PreconditionError("contour profile needs at least one sample");
    const FoldNormalForm fnf = fold_normal_form(f, tol);
    const MapGerm& g = fnf.germ;
    const int n = g.order();

    const Eigen::Vector3d xi(0.0, c, s);
    TruncatedPoly2 a = dot(cross(g.partial(1, 0), g.partial(0, 1)), xi);
    a.set_coeff(0, 0, 0.0);  // f_v(0) = 0 exactly; drop rounding

    ContourProfile out;
    out.v1 = implicit_curve(a);
    out.v1_second = 2.0 * out.v1.coeff(2, 0);

    // Planar coordinates of π_ξ(c): along e1 and along ξ × e1 = (0, sinφ, -cosφ).
    const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u);
    const TruncatedPoly2 p1 = compose(g[0], u, out.v1);
    const TruncatedPoly2 p2 = s * compose(g[1], u, out.v1) - c * compose(g[2], u, out.v1);
    const double d1 = p1.coeff(1, 0);
    out.kappa1 = 2.0 * p2.coeff(2, 0) * d1 / std::pow(std::abs(d1), 3);

    out.samples.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? 0.0 : -u_max + 2.0 * u_max * i / (samples - 1);
        out.samples.push_back({t, p1.eval(t, 0.0), p2.eval(t, 0.0)});
    }
    return out;
}

}  // namespace axial
