#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "axial/contact.hpp"
#include "axial/errors.hpp"
#include "axial/io/export.hpp"
#include "axial/io/parser.hpp"
#include "axial/io/report.hpp"
#include "axial/normalization.hpp"
#include "random_germs.hpp"

using namespace axial;
using axial::testing::GermRng;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::vector<std::vector<double>> csv_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("expression examples") {
    const MapGerm f = io::parse_expression("u; u^2+v^2; 2u^2+u v");
    CHECK(f[0].coeff(1, 0) == 1.0);
    CHECK(f[1].coeff(2, 0) == 1.0);
    CHECK(f[1].coeff(0, 2) == 1.0);
    CHECK(f[2].coeff(2, 0) == 2.0);
    CHECK(f[2].coeff(1, 1) == 1.0);
    CHECK(f.order() == kDefaultOrder);

    const MapGerm g = io::parse_expression("u; 3/2 u^2 + v*v; -1.5e0 u^2 v/2 + 0.25 v^3", 4);
    CHECK(g[1].coeff(2, 0) == 1.5);
    CHECK(g[1].coeff(0, 2) == 1.0);
    CHECK(g[2].coeff(2, 1) == -0.75);
    CHECK(g[2].coeff(0, 3) == 0.25);
    CHECK(g.order() == 4);
    // Terms above the order are a parse error rather than silent truncation.
    CHECK_THROWS_AS(io::parse_expression("u; v^2; u^6"), ParseError);
}

TEST_CASE("expression errors carry positions") {
    try {
        io::parse_expression("u; v^2 + 3; u v");
        FAIL("constant term accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("constant") != std::string::npos);
    }
    try {
        io::parse_expression("u; v^2; u v^7", 5);
        FAIL("over-order monomial accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("u^1 v^7") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_expression("u; u^2"), ParseError);
    CHECK_THROWS_AS(io::parse_expression("u; v^2; w"), ParseError);
    CHECK_THROWS_AS(io::parse_expression("u; v^2; u v /0"), ParseError);
    CHECK_THROWS_AS(io::parse_expression("u; v^2; u v; v"), ParseError);
    CHECK_THROWS_AS(io::parse_expression(""), ParseError);
}

TEST_CASE("document parsing") {
    const std::string doc = R"({"order": 4, "components": [
        [{"i": 1, "j": 0, "c": 1}],
        [{"i": 2, "j": 0, "c": "3/2"}, {"i": 0, "j": 2, "c": 1}],
        [{"i": 2, "j": 0, "c": 2.5}, {"i": 0, "j": 3, "c": 1}]]})";
    const MapGerm f = io::parse_germ(doc);
    CHECK(f.order() == 4);
    CHECK(f[1].coeff(2, 0) == 1.5);
    CHECK(f[2].coeff(2, 0) == 2.5);
    CHECK(io::parse_germ(doc, 6).order() == 6);
    CHECK(f == io::parse_germ("u; 3/2 u^2 + v^2; 5/2 u^2 + v^3", 4));

    CHECK_THROWS_AS(io::parse_document(R"({"components": [[], []]})"), ParseError);
    CHECK_THROWS_AS(io::parse_document(R"({"components": [[{"i":0,"j":0,"c":1}], [], []]})"), ParseError);
    CHECK_THROWS_AS(io::parse_document(R"({"components": [[{"i":1,"j":0,"c":"1/0"}], [], []]})"), ParseError);
    CHECK_THROWS_AS(io::parse_document("{not json"), ParseError);
}

TEST_CASE("serialization round-trips") {
    GermRng rng(71);
    for (int trial = 0; trial < 1000; ++trial) {
        const int order = rng.integer(2, 7);
        const double c = rng.uniform(0.01, 1e3);
        const MapGerm f(rng.terms(order, 1, order, c), rng.terms(order, 1, order, c), rng.terms(order, 1, order, c));
        CHECK(io::parse_expression(io::serialize_expression(f), order) == f);
        CHECK(io::parse_document(io::serialize_document(f)) == f);
    }
}

TEST_CASE("report is deterministic and carries every field") {
    const MapGerm f = io::parse_expression("u; u^2+v^2; 2u^2+u v");
    const auto r = io::analyze(f);
    CHECK(r.dump() == io::analyze(io::parse_expression("u; u^2 + v^2; 2u^2 + u*v")).dump());
    for (const char* key : {"input", "corank", "monge", "parabola", "axial_frame", "asymptotic_directions", "point_type",
                            "kappa_a", "kappa_a_routes", "kappa_u", "kappa_s", "height_type", "one_side", "binormal",
                            "crosscap_type", "intersection_branches", "cuspidal_edge_contact", "fold_normal_form",
                            "frontality"})
        CHECK_MESSAGE(r.contains(key), key);
    CHECK(r["kappa_a"]["value"].get<double>() == doctest::Approx(2.0));
    CHECK(r["crosscap_type"] == "EllipticCC");
    CHECK(r["cuspidal_edge_contact"].contains("not_applicable"));
    CHECK(r["kappa_s"].contains("not_applicable"));
    CHECK_THROWS_AS(io::analyze(io::parse_expression("u; v; 0")), PreconditionError);
}

TEST_CASE("germ hash") {
    const MapGerm f = io::parse_expression("u; u^2+v^2; 2u^2+u v");
    const std::string h = io::germ_hash(f);
    CHECK(h.size() == 64);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(h == io::germ_hash(io::parse_expression("u ; v^2 + u^2 ; u v + 2 u^2")));
    CHECK(h != io::germ_hash(io::parse_expression("u; u^2+v^2; 2u^2+u v", 6)));
    CHECK(h != io::germ_hash(io::parse_expression("u; u^2+v^2; 2u^2+1.0000001 u v")));
}

TEST_CASE("report CSV flattening") {
    const std::string csv = io::report_to_csv(io::analyze(io::parse_expression("u; u^2+v^2; 2u^2+u v")));
    CHECK(csv.find("monge.a20,2\n") != std::string::npos);
    CHECK(csv.find("kappa_a.value,2\n") != std::string::npos);
    CHECK(csv.find("cuspidal_edge_contact.not_applicable,") != std::string::npos);
}

TEST_CASE("table headers") {
    const MapGerm cross = io::parse_expression("u; -u^2 + v^2; u v");
    const MapGerm fold = io::parse_expression("u; u^2/2 + v^2/2; u^2 v/2");
    const CurvatureParabola cp = curvature_parabola(to_monge_form(cross).coeffs);
    CHECK(first_line(io::branches_table(intersection_branches(cross)).to_csv()) == "branch,t,x,y,z");
    CHECK(first_line(io::parabola_table(cp, -1, 1, 5).to_csv()) == "y,n1,n2");
    CHECK(first_line(io::mesh_table(cross, 0.5, 3).to_csv()) == "u,v,x,y,z");
    CHECK(first_line(io::blowup_table(fold, {0.1}, {0.0}).to_csv()) == "r,theta,K,Ktilde");
    CHECK(first_line(io::contour_table(koenderink_profile(fold, 1.0)).to_csv()) == "u,p1,p2");
    const auto j = io::mesh_table(cross, 0.5, 3).to_json();
    CHECK(j["columns"].size() == 5);
    CHECK(j["rows"].size() == 9);
}

TEST_CASE("parabola rows") {
    const CurvatureParabola cp = curvature_parabola(to_monge_form(io::parse_expression("u; u^2+v^2; 2u^2+u v")).coeffs);
    const auto rows = csv_rows(io::parabola_table(cp, -2, 2, 9).to_csv());
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
        const double y = row[0];
        CHECK(row[1] == doctest::Approx(2 + 2 * y * y));
        CHECK(row[2] == doctest::Approx(4 + 2 * y));
    }
}

TEST_CASE("branch rows of an elliptic cross-cap lie on two parabolas") {
    // z = x²/a in the plane frame, with a the two roots of a² - 3a + 1.
    const MapGerm f = io::parse_expression("u; u^2 - 3u v + v^2; u v");
    const auto rows = csv_rows(io::branches_table(intersection_branches(f, 21, 0.01)).to_csv());
    REQUIRE(rows.size() == 42);
    const double a_plus = (3 + std::sqrt(5.0)) / 2, a_minus = (3 - std::sqrt(5.0)) / 2;
    for (const auto& row : rows) {
        const double x = row[2], y = row[3], z = row[4];
        CHECK(std::abs(y) < 1e-8);
        if (std::abs(x) < 1e-4) continue;
        const double a = x * x / z;
        CHECK(std::min(std::abs(a - a_plus), std::abs(a - a_minus)) < 1e-3);
    }
}

TEST_CASE("mesh rejects regular germs") {
    CHECK_THROWS_AS(io::mesh_table(io::parse_expression("u; v; 0"), 1.0, 5), PreconditionError);
}
