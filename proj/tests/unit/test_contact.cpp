#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axial/contact.hpp"
#include "axial/errors.hpp"
#include "axial/io/parser.hpp"
#include "random_germs.hpp"

using namespace axial;
using axial::testing::GermRng;

namespace {

MapGerm germ(const char* text, int order = kDefaultOrder) { return io::parse_expression(text, order); }

double kappa_a_of(const MapGerm& f) { return kappa_a_monge(to_monge_form(f).coeffs).value; }

MapGerm random_a1_minus(GermRng& rng) {
    for (;;) {
        const MapGerm f = axial::testing::disguise(rng, axial::testing::random_nondegenerate_monge(rng));
        if (kappa_a_of(f) < -1e-3) return f;
    }
}

}  // namespace

TEST_CASE("height jet examples") {
    const MongeData md = to_monge_form(germ("u; 3u^2 + v^2; 0"));
    const TruncatedPoly2 h = height_jet(md, axial_vector(curvature_parabola(md.coeffs)));
    CHECK(h.coeff(2, 0) == doctest::Approx(3.0));
    CHECK(h.coeff(0, 2) == doctest::Approx(1.0));
    CHECK(h.coeff(1, 1) == doctest::Approx(0.0));
    const MongeData origin = to_monge_form(germ("u; u^3; 0"));
    CHECK_THROWS_AS(height_jet(origin, axial_vector(curvature_parabola(origin.coeffs))), PreconditionError);
}

TEST_CASE("Hessian in special coordinates") {
    GermRng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const MapGerm g = trial % 2 ? axial::testing::random_halfline_monge(rng)
                                    : axial::testing::random_nondegenerate_monge(rng);
        const MapGerm f = axial::testing::disguise(rng, g);
        const MapGerm s = special_coordinates(to_monge_form(f));
        const Eigen::Vector3d fvv = s.derivative(0, 2);
        Eigen::Matrix2d expect;
        expect << s.derivative(2, 0).dot(fvv), s.derivative(1, 1).dot(fvv), s.derivative(1, 1).dot(fvv), 1.0;
        CHECK((height_hessian(f) - expect).norm() < 1e-10);
        CHECK(height_hessian(f).determinant() == doctest::Approx(kappa_a_of(f)));
    }
}

TEST_CASE("height type examples") {
    CHECK(height_type(germ("u; u^2+v^2; 2u^2+u v")) == HeightType::A1Plus);
    CHECK(height_type(germ("u; -u^2+v^2; u v")) == HeightType::A1Minus);
    CHECK(height_type(germ("u; u v; u^2")) == HeightType::A1Minus);
    CHECK(height_type(germ("u; u^2; 0")) == HeightType::Corank2);
    // kappa_a = 0 with <f_uuu, f_vv> = 6 and <f_uv, f_vv> = 0.
    const MapGerm a2 = germ("u; v^2/2 + u^3; 0");
    CHECK(kappa_a_of(a2) == doctest::Approx(0.0));
    CHECK(height_type(a2) == HeightType::A2);
    CHECK(height_type(germ("u; v^2/2 + u^4; 0")) == HeightType::AAtLeast3);
    CHECK_THROWS_AS(height_type(germ("u; v^2/2; 0", 2)), PreconditionError);
}

TEST_CASE("A2 example against a direct look at the height function") {
    // h = v²/2 + u³: degenerate Hessian, kernel along u, where h restricts to u³.
    const MapGerm f = germ("u; v^2/2 + u^3; 0");
    const MongeData md = to_monge_form(f);
    const TruncatedPoly2 h = height_jet(md, axial_vector(curvature_parabola(md.coeffs)));
    CHECK(std::abs(4 * h.coeff(2, 0) * h.coeff(0, 2) - h.coeff(1, 1) * h.coeff(1, 1)) < 1e-12);
    const double t = 1e-2;
    CHECK(h.eval(t, 0) > 0);
    CHECK(h.eval(-t, 0) < 0);
    CHECK(h.eval(0, t) > 0);
}

TEST_CASE("one-side and binormal examples") {
    CHECK(one_side_test(height_type(germ("u; u^2+v^2; 2u^2+u v"))));
    CHECK_FALSE(one_side_test(height_type(germ("u; -u^2+v^2; u v"))));
    const CurvatureParabola point = curvature_parabola(to_monge_form(germ("u; u^2; u^2")).coeffs);
    CHECK(binormal_check(point, axial_vector(point)));
    const CurvatureParabola cross = curvature_parabola(to_monge_form(germ("u; u^2+v^2; 2u^2+u v")).coeffs);
    CHECK_FALSE(binormal_check(cross, axial_vector(cross)));
    const CurvatureParabola line = curvature_parabola(to_monge_form(germ("u; u v; u^2")).coeffs);
    CHECK_THROWS_AS(binormal_check(line, axial_vector(line)), PreconditionError);
}

TEST_CASE("binormal check tracks kappa_a = 0 on random germs") {
    GermRng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const MapGerm g = trial % 2 ? axial::testing::random_halfline_monge(rng)
                                    : axial::testing::random_nondegenerate_monge(rng);
        const MongeData md = to_monge_form(g);
        const CurvatureParabola cp = curvature_parabola(md.coeffs);
        const double ka = kappa_a_monge(md.coeffs).value;
        CHECK(binormal_check(cp, axial_vector(cp)) == (std::abs(ka) <= Tolerance{}.tau(cp.scale)));
    }
}

TEST_CASE("cross-cap types of the worked examples") {
    CHECK(crosscap_type(germ("u; u^2 - 3u v + v^2; u v")) == CrossCapType::EllipticCC);
    CHECK(crosscap_type(germ("u; -u^2 + v^2; u v")) == CrossCapType::HyperbolicCC);
    CHECK(crosscap_type(germ("u; -3u v + v^2; u v")) == CrossCapType::ParabolicCC);
    CHECK_THROWS_AS(crosscap_type(germ("u; v^2; u^2")), PreconditionError);
}

TEST_CASE("branches of the worked examples") {
    const IntersectionBranches hyper = intersection_branches(germ("u; -u^2 + v^2; u v"));
    CHECK(hyper.relation == BranchRelation::OppositeHalfPlanes);
    CHECK(hyper.sides == BranchSides::Opposite);
    const IntersectionBranches para = intersection_branches(germ("u; -3u v + v^2; u v"));
    CHECK(para.relation == BranchRelation::ContainsLine);
    CHECK(para.line_exact);
    CHECK_THROWS_AS(intersection_branches(germ("u; u^2+v^2; 2u^2+u v")), PreconditionError);
}

TEST_CASE("branches solve the height equation on random A1- germs") {
    GermRng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const MapGerm f = random_a1_minus(rng);
        const IntersectionBranches b = intersection_branches(f, 21, 0.05);
        const double scale = f.scale(f.order());
        for (const Branch& br : b.branches) {
            // The v_a coordinate of the image is the height function along the branch.
            CHECK(is_negligible(br.image[1], 1e-8 * (1 + scale), f.order()));
            for (const Eigen::Vector3d& p : br.samples) CHECK(std::abs(p.y()) <= 1e-6 * (1 + scale));
        }
        CHECK(b.branches[0].samples.size() == b.sample_t.size());
    }
}

TEST_CASE("cross-cap type against sampled branch heights") {
    GermRng rng(54);
    for (int trial = 0; trial < 100; ++trial) {
        const MapGerm f = random_a1_minus(rng);
        const IntersectionBranches b = intersection_branches(f, 41, 1e-3);
        // nu2 heights of the two branches at the first sample (t = -t_max).
        const double z1 = b.branches[0].samples.front().z(), z2 = b.branches[1].samples.front().z();
        const double w1 = b.branches[0].samples.back().z(), w2 = b.branches[1].samples.back().z();
        CHECK((z1 > 0) == (w1 > 0));
        CHECK((z2 > 0) == (w2 > 0));
        const CrossCapType t = crosscap_type(f);
        if (t == CrossCapType::EllipticCC) CHECK((z1 > 0) == (z2 > 0));
        if (t == CrossCapType::HyperbolicCC) CHECK((z1 > 0) != (z2 > 0));
    }
}

TEST_CASE("cuspidal edge contact of the worked examples") {
    const CuspidalEdgeContact i = cuspidal_edge_contact(germ("u; -u^2 + v^2; u^2 + v^3"));
    CHECK(i.kind == CuspidalContact::Hyperbolic);
    CHECK(i.branches.minima);
    CHECK(std::abs(i.det_u_uu_vv) > 0.1);
    const CuspidalEdgeContact ii = cuspidal_edge_contact(germ("u; -u^2 + v^2; v^3"));
    CHECK(ii.kind == CuspidalContact::Inflection);
    CHECK(ii.det_u_uu_vv == doctest::Approx(0.0));
    const CuspidalEdgeContact iii = cuspidal_edge_contact(germ("u; -u^2 + u^3 + v^2; u^3 + v^3"));
    CHECK(std::min(std::abs(iii.a_plus_3), std::abs(iii.a_minus_3)) < 1e-9);
    CHECK(iii.branches.sides == BranchSides::Mixed);
}

TEST_CASE("third derivatives follow the normal-form closed form") {
    // (u, a20/2 u² + a30/6 u³ + v²/2, b30/6 u³ + b12/2 u v² + b03/6 v³):
    // graphs over x have third derivative b30 - 3 b12 a20 ± b03 (-a20)^(3/2) up to the branch sign.
    GermRng rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const double a20 = -rng.uniform(0.3, 2), a30 = rng.uniform(-1, 1);
        const double b30 = rng.uniform(-2, 2), b12 = rng.uniform(-2, 2), b03 = rng.magnitude(0.5, 2);
        const int n = 5;
        const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u), v = TruncatedPoly2::variable(n, Var::v);
        const MapGerm f(u, a20 / 2 * u * u + a30 / 6 * u * u * u + 0.5 * v * v,
                        b30 / 6 * u * u * u + b12 / 2 * u * v * v + b03 / 6 * v * v * v);
        const CuspidalEdgeContact c = cuspidal_edge_contact(f);
        const double base = b30 - 3 * b12 * a20, spread = b03 * std::pow(-a20, 1.5);
        std::array<double, 2> got{c.a_plus_3, c.a_minus_3}, want{base + spread, base - spread};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got[0] == doctest::Approx(want[0]));
        CHECK(got[1] == doctest::Approx(want[1]));
    }
}

TEST_CASE("cuspidal edge contact preconditions") {
    CHECK_THROWS_AS(cuspidal_edge_contact(germ("u; u^2 + v^2; v^3")), PreconditionError);
    CHECK_THROWS_AS(cuspidal_edge_contact(germ("u; -u^2/2 + v^2/2; u^2 v/2")), PreconditionError);
    CHECK_THROWS_AS(cuspidal_edge_contact(germ("u; -u^2 + v^2; u v")), PreconditionError);
}
