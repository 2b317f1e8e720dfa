#include "axial/io/report.hpp"

#include <array>
#include <functional>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "axial/blowup.hpp"
#include "axial/contact.hpp"
#include "axial/curvature.hpp"
#include "axial/errors.hpp"
#include "axial/io/parser.hpp"
#include "axial/normalization.hpp"
#include "axial/parabola.hpp"

namespace axial::io {

using json = nlohmann::ordered_json;

std::string germ_hash(const MapGerm& f) {
    const std::string text = fmt::format("order {}: {}", f.order(), serialize_expression(f));
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw DegeneracyError("SHA-256 digest failed");
    }
    std::string hex;
    for (unsigned int k = 0; k < len; ++k) hex += fmt::format("{:02x}", digest[k]);
    return hex;
}

namespace {

json vec(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }

json not_applicable(const std::string& reason) { return json{{"not_applicable", reason}}; }

json guarded(const std::function<json()>& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return not_applicable(e.what());
    }
}

json value_json(const CurvatureValue& v) {
    json j{{"kind", std::string(to_string(v.kind))}};
    j["value"] = v.has_value() ? json(v.value) : json(nullptr);
    return j;
}

json monge_json(const MongeCoefficients& m) {
    return json{{"a20", m.a20}, {"a11", m.a11}, {"a02", m.a02}, {"b20", m.b20}, {"b11", m.b11}, {"b02", m.b02}};
}

void require_corank_one(const MapGerm& f, const Tolerance& tol) {
    const int corank = corank_at_origin(f, tol);
    if (corank == 0) throw PreconditionError("regular point: corank 0, the germ is an immersion");
    if (corank == 2) throw PreconditionError("corank 2 singularity: df(0) = 0");
}

}  // namespace

json classify_report(const MapGerm& f, const AnalyzeOptions& opt) {
    const Tolerance& tol = opt.tolerance;
    require_corank_one(f, tol);
    const MongeData md = to_monge_form(f, tol);
    json r;
    r["input"] = {{"hash", germ_hash(f)}, {"order", f.order()}, {"tolerance", tol.base},
                  {"tau", tol.tau(md.coeffs.scale())}};
    r["corank"] = 1;
    r["monge"] = monge_json(md.coeffs);
    r["parabola_class"] = std::string(to_string(classify_2jet(md.coeffs, tol)));
    return r;
}

json analyze(const MapGerm& f, const AnalyzeOptions& opt) {
    const Tolerance& tol = opt.tolerance;
    require_corank_one(f, tol);
    const MongeData md = to_monge_form(f, tol);
    const CurvatureParabola cp = curvature_parabola(md.coeffs, tol);
    const AxialFrame frame = axial_vector(cp);
    const AsymptoticSet as = asymptotic_directions(cp, tol);
    const CurvatureValue ka = kappa_a_monge(md.coeffs, tol);
    const bool has_vertex = cp.cls == ParabolaClass::NonDegenerateParabola || cp.cls == ParabolaClass::HalfLine;

    json r;
    r["input"] = {{"hash", germ_hash(f)}, {"order", f.order()}, {"tolerance", tol.base}, {"tau", tol.tau(cp.scale)}};
    r["corank"] = 1;
    r["monge"] = monge_json(md.coeffs);
    {
        json rot = json::array();
        for (int i = 0; i < 3; ++i) rot.push_back(json::array({md.rotation(i, 0), md.rotation(i, 1), md.rotation(i, 2)}));
        r["target_rotation"] = std::move(rot);
    }
    r["parabola"] = {{"class", std::string(to_string(cp.cls))},
                     {"eta0", vec(cp.eta0)},
                     {"eta1", vec(cp.eta1)},
                     {"eta2", vec(cp.eta2)}};
    if (frame.defined) {
        r["axial_frame"] = {{"defined", true}, {"v_a", vec(frame.v_a)}, {"nu2", vec(frame.nu2)}};
    } else {
        r["axial_frame"] = {{"defined", false}, {"note", "arbitrary: the parabola is the origin"}};
    }
    {
        json a{{"kind", std::string(to_string(as.kind))}, {"roots", as.roots}};
        a["count"] = as.count() < 0 ? json("infinite") : json(as.count());
        r["asymptotic_directions"] = std::move(a);
    }
    r["point_type"] = std::string(to_string(point_type(as)));

    r["kappa_a"] = value_json(ka);
    r["kappa_a_routes"] = {
        {"general", guarded([&] { return value_json(kappa_a_general(md.germ, tol)); })},
        {"intrinsic", guarded([&] { return value_json(kappa_a_intrinsic(md.germ, tol)); })},
        {"oracle", frame.defined ? value_json(kappa_a_oracle(cp, frame)) : not_applicable("axial vector undefined")}};
    r["kappa_u"] = value_json(kappa_u(cp, frame, tol));
    r["kappa_s"] = guarded([&]() -> json {
        if (cp.cls != ParabolaClass::HalfLine) {
            return not_applicable("singular curvature needs a frontal fold (half-line parabola)");
        }
        const SingularCurvature s = kappa_s_frontal(adapted_coordinates(f, tol), tol);
        json j = value_json(s.kappa_s);
        j["lambda_v_sign"] = s.lambda_v_sign;
        return j;
    });

    const json height = guarded([&] { return json(std::string(to_string(height_type(f, tol)))); });
    r["height_type"] = height;
    if (has_vertex && height.is_string()) {
        r["one_side"] = height.get<std::string>() == "A1Plus";
    } else {
        r["one_side"] = not_applicable("needs a non-degenerate or half-line parabola");
    }
    r["binormal"] = guarded([&] { return json(binormal_check(cp, frame, tol)); });

    r["crosscap_type"] = cp.cls == ParabolaClass::NonDegenerateParabola
                             ? guarded([&] { return json(std::string(to_string(crosscap_type(f, tol)))); })
                             : not_applicable("not a cross-cap: parabola is degenerate");
    r["intersection_branches"] = guarded([&] {
        const IntersectionBranches b = intersection_branches(f, 2, 0.1, tol);
        return json{{"relation", std::string(to_string(b.relation))},
                    {"sides", std::string(to_string(b.sides))},
                    {"mode", b.mode == BranchMode::VOfU ? "v_of_u" : "u_of_v"},
                    {"slopes", json::array({b.branches[0].slope, b.branches[1].slope})},
                    {"line_exact", b.line_exact},
                    {"minima", b.minima},
                    {"det_u_uu_vv", b.det_u_uu_vv}};
    });
    r["cuspidal_edge_contact"] =
        cp.cls == ParabolaClass::HalfLine
            ? guarded([&] {
                  const CuspidalEdgeContact c = cuspidal_edge_contact(f, tol);
                  return json{{"kind", std::string(to_string(c.kind))},
                              {"det_u_uu_vv", c.det_u_uu_vv},
                              {"a_plus_third_derivative", c.a_plus_3},
                              {"a_minus_third_derivative", c.a_minus_3}};
              })
            : not_applicable("needs a half-line parabola");

    r["fold_normal_form"] = guarded([&] {
        const FoldNormalForm fnf = fold_normal_form(f, tol);
        return json{{"a0", fnf.a0_0},
                    {"b0", fnf.b0_0},
                    {"b1", fnf.b1_0},
                    {"a2", fnf.a2_00},
                    {"ktilde_cos_coefficient", fnf.b1_0 * fnf.b1_0 * fnf.a0_0},
                    {"ktilde_sin_coefficient", -fnf.b1_0 * fnf.b0_0}};
    });
    r["frontality"] = guarded([&] {
        const FrontalityReport fr = frontality(f, tol);
        json series = json::array();
        for (int i = 0; i <= fr.certified_order; ++i) series.push_back(fr.obstruction_series.coeff(i, 0));
        return json{{"is_frontal", fr.is_frontal},
                    {"certified_order", fr.certified_order},
                    {"kappa_f", fr.kappa_f},
                    {"obstruction_series", std::move(series)}};
    });
    return r;
}

namespace {

void flatten(const json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], fmt::format("{}[{}]", path, i), out);
        if (j.empty()) out += path + ",\n";
    } else if (j.is_number_float()) {
        out += fmt::format("{},{:.17g}\n", path, j.get<double>());
    } else if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            s = q + "\"";
        }
        out += path + "," + s + "\n";
    } else {
        out += path + "," + j.dump() + "\n";
    }
}

}  // namespace

std::string report_to_csv(const json& report) {
    std::string out = "field,value\n";
    flatten(report, "", out);
    return out;
}

}  // namespace axial::io
