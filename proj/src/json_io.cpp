#include "clband/json_io.hpp"

#include <fstream>
#include <sstream>

namespace clband {

Json arrangement_to_json(const Arrangement& arr) {
    Json curves = Json::array();
    for (const Curve& c : arr.curves) {
        Json jc;
        jc["type"] = c.kind == CurveKind::Line ? "line" : "conic";
        Json coeffs = Json::array();
        if (c.kind == CurveKind::Line) {
            for (const Rational* q : {&c.D, &c.E, &c.F}) coeffs.push_back(rational_to_string(*q));
        } else {
            for (const Rational* q : {&c.A, &c.B, &c.C, &c.D, &c.E, &c.F})
                coeffs.push_back(rational_to_string(*q));
        }
        jc["coeffs"] = coeffs;
        jc["label"] = c.label;
        curves.push_back(jc);
    }
    Json out;
    out["curves"] = curves;
    return out;
}

Arrangement arrangement_from_json(const Json& j) {
    if (!j.contains("curves") || !j["curves"].is_array())
        throw std::invalid_argument("arrangement JSON: missing \"curves\" array");
    std::vector<Curve> curves;
    for (const auto& jc : j["curves"]) {
        std::string type = jc.at("type").get<std::string>();
        std::vector<Rational> q;
        for (const auto& s : jc.at("coeffs")) q.push_back(parse_rational(s.get<std::string>()));
        std::string label = jc.contains("label") ? jc["label"].get<std::string>() : "";
        if (type == "line") {
            if (q.size() != 3) throw std::invalid_argument("line needs 3 coefficients");
            curves.push_back(Curve::line(q[0], q[1], q[2], label));
        } else if (type == "conic") {
            if (q.size() != 6) throw std::invalid_argument("conic needs 6 coefficients");
            curves.push_back(Curve::conic(q[0], q[1], q[2], q[3], q[4], q[5], label));
        } else {
            throw std::invalid_argument("unknown curve type '" + type + "'");
        }
    }
    return validate(std::move(curves));
}

Arrangement load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    if (j.contains("arrangement")) return arrangement_from_json(j["arrangement"]);
    return arrangement_from_json(j);
}

Json point_to_json(const AlgebraicPoint& p) {
    Json out;
    auto coord = [](const RealAlgebraic& a) {
        Json c;
        if (a.is_rational()) {
            c["value"] = rational_to_string(a.rational_value());
        } else {
            Json poly = Json::array();
            for (const Rational& q : a.defining_poly().coeffs())
                poly.push_back(rational_to_string(q));
            c["poly"] = poly;
            c["interval"] = Json::array({rational_to_string(a.lo()), rational_to_string(a.hi())});
        }
        c["approx"] = a.approx();
        return c;
    };
    out["x"] = coord(p.x_alg());
    out["y"] = coord(p.y_alg());
    return out;
}

Json face_to_json(const Face& f) {
    Json out;
    out["id"] = f.label;
    out["dim"] = f.dim;
    out["support"] = f.support;
    out["signs"] = f.signs.to_string();
    out["bounded"] = f.bounded;
    out["sample"] = point_to_json(f.sample);
    return out;
}

Json faces_to_json(const FaceComplex& fc) {
    Json out;
    Json faces = Json::array();
    for (const Face& f : fc.faces()) faces.push_back(face_to_json(f));
    out["faces"] = faces;
    Json order = Json::array();
    for (auto& [a, b] : fc.order_pairs())
        order.push_back(Json::array({fc.face(a).label, fc.face(b).label}));
    out["order"] = order;
    return out;
}

Json l0_to_json(const L0Set& l0, const FaceComplex& fc) {
    Json out = Json::array();
    for (int i = 0; i < l0.size(); ++i) {
        Json e;
        e["vector"] = l0.elements[static_cast<size_t>(i)].to_string();
        Json fiber = Json::array();
        for (int f : l0.fibers[static_cast<size_t>(i)]) fiber.push_back(fc.face(f).label);
        e["fiber"] = fiber;
        out.push_back(e);
    }
    return out;
}

Json table_to_json(const ProductTable& t) {
    Json out;
    out["kind"] = t.kind == ProductTable::Kind::Geometric
                      ? "geometric"
                      : (t.kind == ProductTable::Kind::Associative ? "associative" : "signs");
    out["elements"] = t.labels;
    Json rows = Json::array();
    for (int i = 0; i < t.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.n(); ++j) row.push_back(t.at(i, j));
        rows.push_back(row);
    }
    out["table"] = rows;
    return out;
}

Json closure_to_json(const std::optional<ClosureWitness>& w) {
    Json out;
    out["closed"] = !w.has_value();
    if (w) {
        out["witness"] = Json{{"u", w->u.to_string()},
                              {"v", w->v.to_string()},
                              {"product", w->product.to_string()}};
    }
    return out;
}

Json violation_to_json(const AxiomViolation& v, const ProductTable& t) {
    Json out;
    out["axiom"] = to_string(v.kind);
    Json wit = Json::array();
    for (int i : v.witness) wit.push_back(t.labels[static_cast<size_t>(i)]);
    out["witness"] = wit;
    return out;
}

Json law_to_json(const CoordinateLaw& law, const Arrangement& arr) {
    Json out;
    out["coordinate"] = arr[law.coordinate].label;
    switch (law.kind) {
        case CoordinateLaw::Kind::ZeroCoordinate:
            out["law"] = "zero";
            break;
        case CoordinateLaw::Kind::Constant:
            out["law"] = "constant";
            out["sign"] = std::string(1, to_char(law.constant));
            break;
        case CoordinateLaw::Kind::SignedProduct:
            out["law"] = "signed-product";
            out["scalar"] = law.scalar;
            {
                Json factors = Json::array();
                for (auto& [idx, mult] : law.factors)
                    factors.push_back(Json::array({idx, mult}));
                out["factors"] = factors;
            }
            break;
    }
    return out;
}

Json embedding_to_json(const EmbeddingReport& rep, const FaceComplex& fc) {
    Json out;
    const Arrangement& arr = fc.arrangement();
    out["component"] = arr[rep.component].label;
    out["oval"] = rep.pointed.oval;
    Json pts = Json::array();
    for (size_t i = 0; i < rep.pointed.points.size(); ++i) {
        Json p;
        p["index"] = static_cast<int>(i) + 1;
        p["point"] = point_to_json(rep.pointed.points[i]);
        Json mults = Json::array();
        for (auto& [j, m] : rep.pointed.point_mults[i])
            mults.push_back(Json{{"curve", arr[j].label}, {"multiplicity", m}});
        p["on"] = mults;
        pts.push_back(p);
    }
    out["points"] = pts;
    if (rep.pointed.removed_point)
        out["removed_point"] = point_to_json(*rep.pointed.removed_point);
    Json faces = Json::array();
    for (size_t m = 0; m < rep.face_map.size(); ++m) {
        Json f;
        f["name"] = rep.band.face_names[m];
        f["restricted_vector"] = rep.band.vectors[m].to_string();
        f["face"] = fc.face(rep.face_map[m]).label;
        f["ambient_vector"] = rep.ambient_vectors[m].to_string();
        faces.push_back(f);
    }
    out["phi"] = faces;
    Json laws = Json::array();
    for (const auto& law : rep.laws) laws.push_back(law_to_json(law, arr));
    out["laws"] = laws;
    out["product_preserving"] = rep.product_preserving;
    return out;
}

Json chamber_rows_to_json(const std::vector<DeletionRestrictionRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json jr;
        jr["component"] = r.label;
        jr["chambers"] = r.chambers_full;
        jr["chambers_deleted"] = r.chambers_deleted;
        jr["restricted_chambers"] = r.restricted_sections;
        jr["bound_classes"] = r.bound_count;
        jr["cl_identity"] = r.cl_identity;
        jr["classical_identity"] = r.classical_identity;
        jr["split_counts_ok"] = r.split_counts_ok;
        out.push_back(jr);
    }
    return out;
}

std::string hasse_dot(const FaceComplex& fc) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (const Face& f : fc.faces())
        os << "  \"" << f.label << "\" [label=\"" << f.label << "\\n" << f.signs.to_string()
           << "\"];\n";
    for (auto& [a, b] : fc.hasse_pairs())
        os << "  \"" << fc.face(a).label << "\" -> \"" << fc.face(b).label << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace clband
