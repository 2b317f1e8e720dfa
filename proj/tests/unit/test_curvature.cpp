#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axial/contact.hpp"
#include "axial/curvature.hpp"
#include "axial/errors.hpp"
#include "axial/io/parser.hpp"
#include "random_germs.hpp"

using namespace axial;
using axial::testing::GermRng;

namespace {

MapGerm germ(const char* text, int order = kDefaultOrder) { return io::parse_expression(text, order); }

struct Invariants {
    CurvatureValue ka, ku;
    ParabolaClass cls;
};

Invariants invariants(const MapGerm& f) {
    const MongeData md = to_monge_form(f);
    const CurvatureParabola cp = curvature_parabola(md.coeffs);
    const AxialFrame fr = axial_vector(cp);
    return {kappa_a_monge(md.coeffs), kappa_u(cp, fr), cp.cls};
}

}  // namespace

TEST_CASE("kappa_a examples") {
    const MapGerm cross = germ("u; u^2+v^2; 2u^2+u v");
    CHECK(invariants(cross).ka.value == doctest::Approx(2.0));
    CHECK(kappa_a_general(cross).value == doctest::Approx(2.0));
    CHECK(kappa_a_intrinsic(cross).value == doctest::Approx(2.0));
    const MongeData md = to_monge_form(cross);
    const CurvatureParabola cp = curvature_parabola(md.coeffs);
    CHECK(kappa_a_oracle(cp, axial_vector(cp)).value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(kappa_a_special(special_coordinates(md)) == doctest::Approx(2.0));

    const Invariants edge = invariants(germ("u; 3/2 u^2 + v^2; 5/2 u^2 + v^3"));
    CHECK(edge.ka.value == doctest::Approx(3.0));
    CHECK(edge.ku.value == doctest::Approx(5.0));

    const Invariants first = invariants(germ("u; u^2+v^2; v^3"));
    CHECK(first.ka.value == doctest::Approx(2.0));
    CHECK(first.ku.value == doctest::Approx(0.0));
    const Invariants second = invariants(germ("u; 2u^2 + 2u v^3 + v^6; u^3 + 3u^2 v^3", 6));
    CHECK(second.cls == ParabolaClass::PointNonOrigin);
    CHECK(second.ka.value == doctest::Approx(0.0));
    CHECK(second.ku.value == doctest::Approx(4.0));
}

TEST_CASE("value kinds by class") {
    CHECK(invariants(germ("u; u v; u^2")).ka.kind == CurvatureValue::Kind::Unbounded);
    CHECK(invariants(germ("u; u^2; 0")).ka.kind == CurvatureValue::Kind::ZeroByDefinition);
    CHECK(invariants(germ("u; u^3; 0")).ka.kind == CurvatureValue::Kind::ZeroByDefinition);
    CHECK(invariants(germ("u; v^2; u v")).ku.kind == CurvatureValue::Kind::Undefined);
    CHECK(invariants(germ("u; v^2; u^2")).ku.kind == CurvatureValue::Kind::Finite);
}

TEST_CASE("cross-cap normal form gives 2 c20 - c11^2 / (2 c02)") {
    GermRng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const double c20 = rng.uniform(-2, 2), c11 = rng.uniform(-2, 2), c02 = rng.uniform(0.3, 2);
        const MongeCoefficients m{2 * c20, c11, 2 * c02, 0, 1, 0};
        TruncatedPoly2 z(5);  // uv + O(3)(v)
        for (int d = 3; d <= 5; ++d) z.set_coeff(0, d, rng.uniform(-1, 1));
        const MapGerm f = axial::testing::monge_germ(5, m, rng.terms(5, 3, 5), z);
        CHECK(invariants(f).ka.value == doctest::Approx(2 * c20 - c11 * c11 / (2 * c02)));
    }
}

TEST_CASE("special-coordinate formula agrees with the closed form") {
    GermRng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const MapGerm g = trial % 2 ? axial::testing::random_halfline_monge(rng)
                                    : axial::testing::random_nondegenerate_monge(rng);
        const MongeData md = to_monge_form(axial::testing::disguise(rng, g));
        CHECK(kappa_a_special(special_coordinates(md)) == doctest::Approx(kappa_a_monge(md.coeffs).value));
    }
}

TEST_CASE("kappa_a and kappa_u are invariant under target isometries") {
    GermRng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const MapGerm g = axial::testing::disguise(rng, axial::testing::random_halfline_monge(rng));
        const Invariants a = invariants(g), b = invariants(germ_rotate(g, rng.rotation()));
        CHECK(std::abs(a.ka.value - b.ka.value) < 1e-9);
        CHECK(std::abs(a.ku.value - b.ku.value) < 1e-9);
        // The intrinsic route needs f_v(0) = 0, which the Monge germ provides.
        const MapGerm m = to_monge_form(g).germ;
        CHECK(std::abs(kappa_a_intrinsic(m).value - kappa_a_intrinsic(germ_rotate(m, rng.rotation())).value) < 1e-9);
    }
}

TEST_CASE("kappa_a vanishes exactly on binormal configurations") {
    GermRng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        // Half-line whose vertex value is orthogonal to its direction.
        const double angle = rng.uniform(0, 2 * M_PI), rho = rng.uniform(0.5, 2), t = rng.uniform(-1, 1);
        const double s = rng.magnitude(0.5, 2);
        const Eigen::Vector2d e2(rho * std::cos(angle), rho * std::sin(angle));
        const Eigen::Vector2d e1 = t * e2;
        const Eigen::Vector2d e0 = t * t * e2 + s * Eigen::Vector2d(-e2.y(), e2.x());
        const MongeCoefficients m{e0.x(), e1.x(), e2.x(), e0.y(), e1.y(), e2.y()};
        const CurvatureParabola cp = curvature_parabola(m);
        const AxialFrame fr = axial_vector(cp);
        CHECK(std::abs(kappa_a_monge(m).value) < 1e-9);
        CHECK(binormal_check(cp, fr));
        // Moving the vertex off the nu2-axis breaks both.
        MongeCoefficients moved = m;
        moved.a20 += 0.3 * e2.x();
        moved.b20 += 0.3 * e2.y();
        const CurvatureParabola cq = curvature_parabola(moved);
        CHECK(std::abs(kappa_a_monge(moved).value) > 1e-3);
        CHECK_FALSE(binormal_check(cq, axial_vector(cq)));
    }
}

TEST_CASE("singular curvature examples") {
    const SingularCurvature s = kappa_s_frontal(adapted_coordinates(germ("u; 3/2 u^2 + v^2; 5/2 u^2 + v^3")));
    CHECK(std::abs(s.kappa_s.value) == doctest::Approx(3.0));
    const SingularCurvature z = kappa_s_frontal(adapted_coordinates(germ("u; v^2; v^3")));
    CHECK(z.kappa_s.value == doctest::Approx(0.0));
    CHECK(invariants(germ("u; v^2; v^3")).ka.value == doctest::Approx(0.0));
    CHECK_THROWS_AS(adapted_coordinates(germ("u; u^2/2 + v^2/2; u^2 v/2")), PreconditionError);
}

TEST_CASE("sign law for frontals in disguise") {
    GermRng rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const MapGerm f = axial::testing::disguise(rng, axial::testing::random_frontal_monge(rng));
        const SingularCurvature s = kappa_s_frontal(adapted_coordinates(f));
        const double ka = invariants(f).ka.value;
        CHECK(std::abs(s.kappa_s.value - s.lambda_v_sign * ka) < 1e-8);
        CHECK(std::abs(std::abs(s.kappa_s.value) - std::abs(ka)) < 1e-8);
    }
}

TEST_CASE("Pythagorean relation for a11 = b11 = 0") {
    GermRng rng(46);
    for (int trial = 0; trial < 100; ++trial) {
        MongeCoefficients m{rng.uniform(-3, 3), 0, rng.uniform(-3, 3), rng.uniform(-3, 3), 0, rng.uniform(-3, 3)};
        const Invariants inv = invariants(axial::testing::monge_germ(5, m, rng.terms(5, 3, 5), rng.terms(5, 3, 5)));
        CHECK(inv.ka.value * inv.ka.value + inv.ku.value * inv.ku.value ==
              doctest::Approx(m.a20 * m.a20 + m.b20 * m.b20).epsilon(1e-12));
    }
}

TEST_CASE("frontality examples") {
    const FrontalityReport edge = frontality(germ("u; v^2/2; v^3/6"));
    CHECK(edge.is_frontal);
    CHECK(edge.kappa_f == doctest::Approx(0.0));
    const FrontalityReport fold = frontality(germ("u; u^2/2 + v^2/2; u^2 v/2"));
    CHECK_FALSE(fold.is_frontal);
    CHECK(fold.kappa_f == doctest::Approx(1.0));
    // b1(0) = 0 but frontal: the obstruction series vanishes identically.
    const FrontalityReport ccr = frontality(germ("u; v^2/2; u v^3"));
    CHECK(ccr.is_frontal);
    CHECK(ccr.kappa_f == doctest::Approx(0.0));
    // b1(0) = 0 and not frontal: the obstruction appears at the next order.
    const FrontalityReport late = frontality(germ("u; v^2/2; u^3 v"));
    CHECK_FALSE(late.is_frontal);
    CHECK(late.kappa_f == doctest::Approx(0.0));
}

TEST_CASE("frontal germs have a vanishing obstruction series") {
    GermRng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const bool frontal = trial % 2 == 0;
        const MapGerm g = frontal ? axial::testing::random_frontal_monge(rng) : axial::testing::random_halfline_monge(rng);
        const FrontalityReport r = frontality(axial::testing::disguise(rng, g));
        if (r.is_frontal) CHECK(is_negligible(r.obstruction_series, 1e-8, r.certified_order));
        if (std::abs(r.kappa_f) > 1e-9) CHECK_FALSE(r.is_frontal);
        if (frontal) CHECK(r.is_frontal);
    }
}

TEST_CASE("frontality of raw components needs a fold") {
    const int n = 4;
    const TruncatedPoly2 u = TruncatedPoly2::variable(n, Var::u), v = TruncatedPoly2::variable(n, Var::v);
    CHECK_THROWS_AS(frontality_of_components(u * v, v * v, {}), PreconditionError);
}
