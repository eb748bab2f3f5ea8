#include "galois/report_json.hpp"

namespace galois {

namespace {

Json scalar4_json(const std::array<Rational, 4>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json vector4c_json(const Eigen::Vector4cd& v) {
    Json out = Json::array();
    for (int i = 0; i < 4; ++i) out.push_back(complex_json(v(i)));
    return out;
}

Json gauss4_json(const std::array<GaussRational, 4>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json matrix_json(const ProjTransform& t) {
    Json out = Json::array();
    if (t.is_exact()) {
        for (int i = 0; i < 4; ++i) {
            Json row = Json::array();
            for (int j = 0; j < 4; ++j) row.push_back(to_string(t.gauss()(i, j)));
            out.push_back(row);
        }
    } else {
        for (int i = 0; i < 4; ++i) {
            Json row = Json::array();
            for (int j = 0; j < 4; ++j) row.push_back(complex_json(t.numeric_matrix()(i, j)));
            out.push_back(row);
        }
    }
    return out;
}

} // namespace

Json point_json(const ProjPoint& p) { return scalar4_json(p.coords()); }

Json line_json(const ProjLine& l) {
    return Json{{"points", Json::array({point_json(l.point_a()), point_json(l.point_b())})},
                {"planes", Json::array({scalar4_json(l.plane_a().coeffs()),
                                        scalar4_json(l.plane_b().coeffs())})}};
}

Json numeric_line_json(const NumericLine& l) {
    return Json{{"points", Json::array({vector4c_json(l.a), vector4c_json(l.b)})},
                {"planes", Json::array({vector4c_json(l.h1), vector4c_json(l.h2)})}};
}

Json group_json(const AutomorphismGroup& g) {
    Json els = Json::array();
    for (const auto& t : g.elements) els.push_back(t.to_string());
    Json out{{"label", g.label},
             {"kind", g.kind == AutomorphismGroup::Kind::V4
                          ? "V4"
                          : (g.kind == AutomorphismGroup::Kind::Z4 ? "Z4" : "other")},
             {"elements", els}};
    if (g.z4_mn) out["mn"] = Json::array({(*g.z4_mn)[0], (*g.z4_mn)[1]});
    if (g.v4_indices) out["ij"] = Json::array({(*g.v4_indices)[0], (*g.v4_indices)[1]});
    return out;
}

Json curve_function_json(const CurveFunction& f) {
    return Json{{"a", f.a.to_string()}, {"b", f.b.to_string()}};
}

Json curve_json(const EllipticCurveModel& curve) {
    Json roots = Json::array(), c = Json::array(), a = Json::array();
    for (int i = 0; i < 3; ++i) {
        roots.push_back(to_string(curve.e[static_cast<size_t>(i)]));
        c.push_back(to_string(curve.c[static_cast<size_t>(i)]));
        a.push_back(to_string(curve.a[static_cast<size_t>(i)]));
    }
    return Json{{"roots", roots},
                {"p", to_string(curve.p)},
                {"q", to_string(curve.q)},
                {"c", c},
                {"a", a},
                {"jClassical", to_string(curve.j_classical)},
                {"isLemniscatic", curve.is_lemniscatic}};
}

Json record_json(const GaloisLineRecord& r) {
    Json out{{"label", r.label},
             {"kind", r.kind == GaloisLineRecord::Kind::V4 ? "V4" : "Z4"},
             {"group", group_json(r.group)},
             {"incidentVertices", r.incident_vertices},
             {"lineNumeric", numeric_line_json(r.line)}};
    if (r.line_exact) out["line"] = line_json(*r.line_exact);
    if (r.line_gauss) {
        out["lineGauss"] = Json{
            {"points", Json::array({gauss4_json(r.line_gauss->points[0]),
                                    gauss4_json(r.line_gauss->points[1])})},
            {"planes", Json::array({gauss4_json(r.line_gauss->planes[0]),
                                    gauss4_json(r.line_gauss->planes[1])})}};
    }
    Json mats = Json::array();
    for (const auto& m : r.matrices) mats.push_back(matrix_json(m));
    out["matrices"] = mats;
    out["certificate"] = Json{{"type", r.certificate.exact ? "exact" : "numeric"},
                              {"maxResidual", r.certificate.max_residual},
                              {"checks",
                               Json{{"disjointFromCurve", r.certificate.disjoint_from_curve},
                                    {"planePencilFixed", r.certificate.plane_pencil_fixed},
                                    {"quadricSpanPreserved", r.certificate.quadric_span_preserved},
                                    {"groupTableMatches", r.certificate.group_table_matches},
                                    {"orbitsCoplanarThroughLine",
                                     r.certificate.orbits_coplanar_through_line}}},
                              {"passed", r.certificate.passed()}};
    if (!r.recovery_note.empty()) out["recovery"] = r.recovery_note;
    return out;
}

Json report_json(const ArrangementReport& rep) {
    Json lines = Json::array();
    int n_v4 = 0, n_z4 = 0;
    for (const auto& r : rep.lines) {
        lines.push_back(record_json(r));
        (r.kind == GaloisLineRecord::Kind::V4 ? n_v4 : n_z4)++;
    }
    Json incidence = Json::array();
    for (const auto& e : rep.incidence) {
        Json edge{{"a", e.line_a},
                  {"b", e.line_b},
                  {"meet", e.meet},
                  {"sharedInvolution", e.shared_involution},
                  {"residual", e.residual}};
        if (e.vertex) edge["vertex"] = *e.vertex;
        incidence.push_back(edge);
    }
    Json degrees;
    for (const auto& [v, d] : rep.vertex_degrees)
        degrees[std::to_string(v)] = Json{{"v4", d.first}, {"z4", d.second}};
    Json claims = Json::array();
    for (const auto& c : rep.claims)
        claims.push_back(Json{{"name", c.name},
                              {"status", c.pass ? "pass" : "fail"},
                              {"residual", c.residual},
                              {"detail", c.detail}});
    Json tetra{{"vertices", Json::array()},
               {"vertexDeterminant", to_string(rep.tetra.vertex_determinant)},
               {"subDeterminant", to_string(rep.tetra.sub_determinant)}};
    for (const auto& v : rep.tetra.vertices) tetra["vertices"].push_back(point_json(v));

    // The six fixed-field generators, in the serialization of CurveFunction.
    Json generators;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            try {
                generators["G" + std::to_string(i) + std::to_string(j)] =
                    curve_function_json(fixed_generator(rep.curve, V4GroupId{i, j}));
            } catch (const Error&) {
                // reported through the claims instead
            }
        }

    return Json{{"schemaVersion", 1},
                {"curve", curve_json(rep.curve)},
                {"tetrahedron", tetra},
                {"fixedFieldGenerators", generators},
                {"lines", lines},
                {"incidence", incidence},
                {"counts", Json{{"lines", static_cast<int>(rep.lines.size())},
                                {"v4", n_v4},
                                {"z4", n_z4},
                                {"vertexDegrees", degrees}}},
                {"claims", claims},
                {"discrepancies", rep.discrepancies},
                {"seed", rep.seed},
                {"tolerance", rep.tolerance},
                {"allClaimsPass", rep.all_claims_pass()}};
}

Json plane_record_json(const PlaneCurveRecord& rec) {
    Json out{{"center", point_json(rec.center)},
             {"degree", rec.degree},
             {"isConicSquare", rec.is_conic_square},
             {"membershipResidual", rec.membership_residual},
             {"form", rec.form.coefficient_map()}};
    if (rec.conic) out["conic"] = rec.conic->coefficient_map();
    return out;
}

} // namespace galois
