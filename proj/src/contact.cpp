#include "axial/contact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "axial/errors.hpp"

namespace axial {

std::string_view to_string(HeightType t) noexcept {
    switch (t) {
        case HeightType::A1Plus: return "A1Plus";
        case HeightType::A1Minus: return "A1Minus";
        case HeightType::A2: return "A2";
        case HeightType::AAtLeast3: return "AAtLeast3";
        case HeightType::Corank2: return "Corank2";
    }
    return "?";
}

std::string_view to_string(BranchRelation r) noexcept {
    switch (r) {
        case BranchRelation::SameHalfPlane: return "SameHalfPlane";
        case BranchRelation::OppositeHalfPlanes: return "OppositeHalfPlanes";
        case BranchRelation::ContainsLine: return "ContainsLine";
        case BranchRelation::InflectionContact: return "InflectionContact";
        case BranchRelation::TangentExtrema: return "TangentExtrema";
    }
    return "?";
}

std::string_view to_string(BranchSides s) noexcept {
    switch (s) {
        case BranchSides::Same: return "Same";
        case BranchSides::Opposite: return "Opposite";
        case BranchSides::Mixed: return "Mixed";
        case BranchSides::OnLine: return "OnLine";
    }
    return "?";
}

std::string_view to_string(CrossCapType t) noexcept {
    switch (t) {
        case CrossCapType::EllipticCC: return "EllipticCC";
        case CrossCapType::HyperbolicCC: return "HyperbolicCC";
        case CrossCapType::ParabolicCC: return "ParabolicCC";
    }
    return "?";
}

std::string_view to_string(CuspidalContact c) noexcept {
    return c == CuspidalContact::Hyperbolic ? "Hyperbolic" : "Inflection";
}

TruncatedPoly2 height_jet(const MongeData& m, const AxialFrame& frame) {
    if (!frame.defined) throw PreconditionError("height function needs a defined axial vector");
    return dot(m.germ.components(), lift(frame.v_a));
}

Eigen::Matrix2d height_hessian(const MapGerm& f, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const CurvatureParabola cp = curvature_parabola(md.coeffs, tol);
    const AxialFrame frame = axial_vector(cp);
    if (!frame.defined) return Eigen::Matrix2d::Zero();
    const MapGerm g = is_degenerate(cp.cls) && cp.cls != ParabolaClass::HalfLine ? md.germ : special_coordinates(md);
    const TruncatedPoly2 h = dot(g.components(), lift(frame.v_a));
    Eigen::Matrix2d hess;
    hess << h.derivative_at_origin(2, 0), h.derivative_at_origin(1, 1), h.derivative_at_origin(1, 1),
        h.derivative_at_origin(0, 2);
    return hess;
}

HeightType height_type(const MapGerm& f, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const ParabolaClass cls = classify_2jet(md.coeffs, tol);
    if (is_point(cls)) return HeightType::Corank2;
    if (cls == ParabolaClass::Line) return HeightType::A1Minus;

    const double tau = tol.tau(md.coeffs.scale());
    const double ka = kappa_a_monge(md.coeffs, tol).value;
    if (ka > tau) return HeightType::A1Plus;
    if (ka < -tau) return HeightType::A1Minus;

    if (md.germ.order() < 3) throw PreconditionError("under-resolved jet: the A2 test needs order >= 3");
    const MapGerm s = special_coordinates(md);
    const Eigen::Vector3d vv = s.derivative(0, 2);
    const double m = s.derivative(1, 1).dot(vv);
    const double q3 = -s.derivative(3, 0).dot(vv) + 3.0 * s.derivative(2, 1).dot(vv) * m -
                      3.0 * s.derivative(1, 2).dot(vv) * m * m + s.derivative(0, 3).dot(vv) * m * m * m;
    return std::abs(q3) > tol.tau(s.scale(3)) ? HeightType::A2 : HeightType::AAtLeast3;
}

bool binormal_check(const CurvatureParabola& cp, const AxialFrame& frame, const Tolerance& tol) {
    if (cp.cls == ParabolaClass::Line) throw PreconditionError("binormal test is not defined for a line parabola");
    if (is_point(cp.cls)) return true;
    // II_{v_a} is singular iff its Schur complement vanishes (II_{v_a}(∂v,∂v) = |eta2| > 0).
    const double k0 = cp.eta0.dot(frame.v_a), k1 = cp.eta1.dot(frame.v_a), k2 = cp.eta2.dot(frame.v_a);
    return std::abs(k0 - k1 * k1 / k2) <= tol.tau(cp.scale);
}

namespace {

using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b) {
    Series r(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Monge germ with the normal plane turned so that v_a is the y-axis and nu2 the z-axis.
// For a cross-cap the source is also sheared so that <eta(0), nu2> = 0, the form in which
// the sign of h_uu separates elliptic from hyperbolic cross-caps.
MapGerm working_germ(const MongeData& md, const CurvatureParabola& cp, const AxialFrame& frame) {
    Eigen::Matrix3d r = Eigen::Matrix3d::Zero();
    r(0, 0) = 1.0;
    r.block<1, 2>(1, 1) = frame.v_a.transpose();
    r.block<1, 2>(2, 1) = frame.nu2.transpose();
    MapGerm g = germ_rotate(md.germ, r);
    if (cp.cls == ParabolaClass::NonDegenerateParabola) {
        const double shift = -cp.eta0.dot(frame.nu2) / (2.0 * cp.eta1.dot(frame.nu2));
        const int n = g.order();
        TruncatedPoly2 y = TruncatedPoly2::variable(n, Var::v);
        y.set_coeff(1, 0, shift);
        g = germ_compose(g, SourceChange(TruncatedPoly2::variable(n, Var::u), y));
    }
    return g;
}

// Solves h(x, c(x)) = 0 for the branch with c'(0) = (-h_xy + sign sqrt(D)) / h_yy, where
// hc(i, j) is the coefficient of x^i y^j. Writes y = x w(x) and iterates on w.
TruncatedPoly2 solve_branch(const TruncatedPoly2& h, bool swapped, int sign, double& slope) {
    const int n = h.order();
    const auto hc = [&](int i, int j) { return swapped ? h.coeff(j, i) : h.coeff(i, j); };
    const double hxx = 2.0 * hc(2, 0), hxy = hc(1, 1), hyy = 2.0 * hc(0, 2);
    const double disc = hxy * hxy - hxx * hyy;
    slope = (-hxy + sign * std::sqrt(std::max(disc, 0.0))) / hyy;

    const int m = n - 2;
    std::vector<Series> a(static_cast<std::size_t>(n) + 1, Series(static_cast<std::size_t>(m) + 1, 0.0));
    for (int j = 0; j <= n; ++j)
        for (int deg = 0; deg <= m; ++deg) {
            const int i = deg - j + 2;
            if (i >= 0 && i + j <= n) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(deg)] = hc(i, j);
        }
    const double hw = hc(1, 1) + 2.0 * hc(0, 2) * slope;
    if (hw == 0.0) throw DegeneracyError("tangent branches: the zero set is not transversal");

    Series w(static_cast<std::size_t>(m) + 1, 0.0);
    w[0] = slope;
    for (int pass = 0; pass <= m; ++pass) {
        Series val = a[static_cast<std::size_t>(n)];
        for (int j = n - 1; j >= 0; --j) {
            val = series_mul(val, w);
            for (int k = 0; k <= m; ++k) val[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
        for (int k = 0; k <= m; ++k) w[static_cast<std::size_t>(k)] -= val[static_cast<std::size_t>(k)] / hw;
    }
    TruncatedPoly2 c(n);
    for (int k = 1; k <= n - 1; ++k) c.set_coeff(k, 0, w[static_cast<std::size_t>(k - 1)]);
    return c;
}

void check_branch(const TruncatedPoly2& h, const TruncatedPoly2& x, const TruncatedPoly2& y) {
    const double residual = compose(h, x, y).max_abs_coeff();
    if (residual > 1e-8 * (1.0 + h.max_abs_coeff())) {
        throw DegeneracyError("branch series failed to solve h = 0 (residual " + std::to_string(residual) + ")");
    }
}

BranchSides compare_sides(const Branch& b1, const Branch& b2) {
    if (b1.leading_order < 0 || b2.leading_order < 0) return BranchSides::OnLine;
    if (b1.leading_order % 2 != b2.leading_order % 2) return BranchSides::Mixed;
    return (b1.leading_coeff > 0) == (b2.leading_coeff > 0) ? BranchSides::Same : BranchSides::Opposite;
}

}  // namespace

IntersectionBranches intersection_branches(const MapGerm& f, int samples, double t_max, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const CurvatureParabola cp = curvature_parabola(md.coeffs, tol);
    const AxialFrame frame = axial_vector(cp);
    const CurvatureValue ka = kappa_a_monge(md.coeffs, tol);
    const double tau = tol.tau(cp.scale);
    if (ka.kind != CurvatureValue::Kind::Finite || ka.value >= -tau) {
        throw PreconditionError("no transversal zero set: needs kappa_a < 0 (A1- height function)");
    }
    if (samples < 2) throw PreconditionError("intersection branches need at least two samples");

    const MapGerm g = working_germ(md, cp, frame);
    const int n = g.order();
    const TruncatedPoly2& h = g[1];
    const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u);
    const double tau_z = tol.tau(g.scale(n));

    IntersectionBranches out;
    out.hessian_uu = h.derivative_at_origin(2, 0);
    out.hessian_uv = h.derivative_at_origin(1, 1);
    out.hessian_vv = h.derivative_at_origin(0, 2);
    out.mode = std::abs(out.hessian_vv) >= std::abs(out.hessian_uu) ? BranchMode::VOfU : BranchMode::UOfV;
    const bool swapped = out.mode == BranchMode::UOfV;
    for (int i = 0; i < samples; ++i) out.sample_t.push_back(-t_max + 2.0 * t_max * i / (samples - 1));
    {
        const Eigen::Vector3d fu = g.derivative(1, 0), fvv = g.derivative(0, 2);
        out.det_u_uu_vv = fu.dot(g.derivative(2, 0).cross(fvv)) / (fu.norm() * fvv.norm());
    }

    for (int k = 0; k < 2; ++k) {
        const int sign = k == 0 ? 1 : -1;
        Branch& b = out.branches[static_cast<std::size_t>(k)];
        b.source_series = solve_branch(h, swapped, sign, b.slope);
        const TruncatedPoly2& x = swapped ? b.source_series : u;
        const TruncatedPoly2& y = swapped ? u : b.source_series;
        check_branch(h, x, y);
        for (int c = 0; c < 3; ++c) b.image[static_cast<std::size_t>(c)] = compose(g[c], x, y);

        // The same geometric curve as a graph over x. With u = a v the graph slope is 1/a,
        // which is the opposite root of the v-of-u quadratic.
        double graph_slope = 0.0;
        const TruncatedPoly2 graph = swapped ? solve_branch(h, false, -sign, graph_slope) : b.source_series;
        b.height_over_x = compose(g[2], u, graph);
        for (int i = 1; i <= n; ++i) {
            const double c = b.height_over_x.coeff(i, 0);
            if (std::abs(c) > tau_z) {
                b.leading_order = i;
                b.leading_coeff = c;
                break;
            }
        }
        b.third_derivative = 6.0 * b.height_over_x.coeff(3, 0);

        b.samples.reserve(out.sample_t.size());
        for (double t : out.sample_t) {
            b.samples.emplace_back(b.image[0].eval(t, 0.0), b.image[1].eval(t, 0.0), b.image[2].eval(t, 0.0));
        }
    }
    out.sides = compare_sides(out.branches[0], out.branches[1]);

    if (cp.cls == ParabolaClass::NonDegenerateParabola) {
        const double huu = out.hessian_uu;
        if (huu > tau) {
            out.relation = BranchRelation::SameHalfPlane;
        } else if (huu < -tau) {
            out.relation = BranchRelation::OppositeHalfPlanes;
        } else {
            out.relation = BranchRelation::ContainsLine;
            // h_uu ~ 0 <= h_vv, so the branches are graphs v = c(u) and one slope vanishes.
            const bool first_flat = std::abs(out.branches[0].slope) <= std::abs(out.branches[1].slope);
            out.line_exact = out.branches[first_flat ? 0 : 1].leading_order < 0;
        }
        return out;
    }

    // Half-line parabola: the branches are tangent, ordered by det(f_u, f_uu, f_vv).
    if (std::abs(out.det_u_uu_vv) > tau) {
        out.relation = BranchRelation::TangentExtrema;
        out.minima = g[2].coeff(2, 0) > 0.0;
        return out;
    }
    const double third = std::max(std::abs(out.branches[0].third_derivative), std::abs(out.branches[1].third_derivative));
    if (third > tau_z) {
        out.relation = BranchRelation::InflectionContact;
        return out;
    }
    switch (out.sides) {
        case BranchSides::Same: out.relation = BranchRelation::SameHalfPlane; break;
        case BranchSides::Opposite: out.relation = BranchRelation::OppositeHalfPlanes; break;
        case BranchSides::OnLine:
            out.relation = BranchRelation::ContainsLine;
            out.line_exact = true;
            break;
        case BranchSides::Mixed: out.relation = BranchRelation::InflectionContact; break;
    }
    return out;
}

CrossCapType crosscap_type(const MapGerm& f, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const CurvatureParabola cp = curvature_parabola(md.coeffs, tol);
    if (cp.cls != ParabolaClass::NonDegenerateParabola) {
        throw PreconditionError("cross-cap type needs a non-degenerate parabola; class is " +
                                std::string(to_string(cp.cls)));
    }
    const MapGerm g = working_germ(md, cp, axial_vector(cp));
    // <f_uu, f_vv> with f_vv normalized to the axial vector.
    const double c = g[1].derivative_at_origin(2, 0);
    const double tau = tol.tau(cp.scale);
    if (c > tau) return CrossCapType::EllipticCC;
    if (c < -tau) return CrossCapType::HyperbolicCC;
    return CrossCapType::ParabolicCC;
}

CuspidalEdgeContact cuspidal_edge_contact(const MapGerm& f, const Tolerance& tol) {
    const MongeData md = to_monge_form(f, tol);
    const ParabolaClass cls = classify_2jet(md.coeffs, tol);
    if (cls != ParabolaClass::HalfLine) {
        throw PreconditionError("cuspidal-edge contact needs a half-line parabola; class is " +
                                std::string(to_string(cls)));
    }
    if (!frontality(f, tol).is_frontal) throw PreconditionError("cuspidal-edge contact needs a frontal");

    CuspidalEdgeContact out;
    out.branches = intersection_branches(f, 41, 0.1, tol);
    out.det_u_uu_vv = out.branches.det_u_uu_vv;
    out.kind = out.branches.relation == BranchRelation::TangentExtrema ? CuspidalContact::Hyperbolic
                                                                       : CuspidalContact::Inflection;
    // The "+" root of the v-of-u quadratic is branch 1 in VOfU mode and branch 2 otherwise.
    const bool swapped = out.branches.mode == BranchMode::UOfV;
    out.a_plus_3 = out.branches.branches[swapped ? 1 : 0].third_derivative;
    out.a_minus_3 = out.branches.branches[swapped ? 0 : 1].third_derivative;
    return out;
}

}  // namespace axial
