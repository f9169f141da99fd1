// clband: exact face decomposition, sign-vector bands, face products,
// restriction/embedding reports, and chamber counting for conic-line
// arrangements in the plane.

#include "clband/chamber_count.hpp"
#include "clband/json_io.hpp"
#include "clband/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace clband;

struct RunConfig {
    std::string input_path;
    std::string output_path;  // empty: stdout
    std::string format = "text";
    long seed = 0;
    int refinement_depth = 24;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitPropertyViolation = 2;
constexpr int kExitAmbiguousTie = 3;

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write output file '" + cfg.output_path + "'");
    out << text;
}

Json meta(const RunConfig& cfg, const Arrangement& arr) {
    Json j;
    j["seed"] = cfg.seed;
    j["refinement_depth"] = cfg.refinement_depth;
    j["arrangement"] = arrangement_to_json(arr);
    return j;
}

std::string table_grid(const ProductTable& t) {
    size_t w = 1;
    for (const auto& l : t.labels) w = std::max(w, l.size());
    std::ostringstream os;
    auto pad = [&](const std::string& s) {
        os << s;
        for (size_t i = s.size(); i < w + 1; ++i) os << ' ';
    };
    pad("*");
    for (const auto& l : t.labels) pad(l);
    os << "\n";
    for (int i = 0; i < t.n(); ++i) {
        pad(t.labels[static_cast<size_t>(i)]);
        for (int j = 0; j < t.n(); ++j) pad(t.labels[static_cast<size_t>(t.at(i, j))]);
        os << "\n";
    }
    return os.str();
}

int cmd_validate(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        j["valid"] = true;
        Json kinds = Json::array();
        for (const Curve& c : arr.curves) {
            Json k;
            k["label"] = c.label;
            switch (c.conic_class()) {
                case ConicClass::NotConic: k["class"] = "line"; break;
                case ConicClass::Ellipse: k["class"] = "ellipse"; break;
                case ConicClass::Parabola: k["class"] = "parabola"; break;
                case ConicClass::Hyperbola: k["class"] = "hyperbola"; break;
            }
            kinds.push_back(k);
        }
        j["classification"] = kinds;
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "valid arrangement with " << arr.size() << " curve(s)  [seed " << cfg.seed << "]\n";
        for (const Curve& c : arr.curves) {
            os << "  " << c.label << ": ";
            switch (c.conic_class()) {
                case ConicClass::NotConic: os << "line"; break;
                case ConicClass::Ellipse: os << "ellipse"; break;
                case ConicClass::Parabola: os << "parabola"; break;
                case ConicClass::Hyperbola: os << "hyperbola"; break;
            }
            os << "\n";
        }
        emit(cfg, os.str());
    }
    return kExitOk;
}

int cmd_faces(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    if (cfg.format == "dot") {
        emit(cfg, "// seed " + std::to_string(cfg.seed) + "\n" + hasse_dot(fc));
        return kExitOk;
    }
    if (cfg.format == "svg") {
        emit(cfg, "<!-- seed " + std::to_string(cfg.seed) + " -->\n" + render_svg(fc));
        return kExitOk;
    }
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        Json body = faces_to_json(fc);
        j["faces"] = body["faces"];
        j["order"] = body["order"];
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    int nv = 0, ne = 0, nc = 0;
    for (const Face& f : fc.faces()) (f.dim == 0 ? nv : (f.dim == 1 ? ne : nc))++;
    os << "faces: " << fc.size() << " (" << nv << " vertices, " << ne << " sections, " << nc
       << " chambers)  [seed " << cfg.seed << "]\n";
    for (const Face& f : fc.faces()) {
        auto [x, y] = f.sample.approx();
        os << "  " << f.label << "  dim=" << f.dim << "  signs=" << f.signs.to_string()
           << (f.bounded ? "  bounded" : "  unbounded") << "  sample~(" << x << ", " << y << ")\n";
    }
    emit(cfg, os.str());
    return kExitOk;
}

int cmd_signs(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    L0Set l0 = sign_image(fc);
    auto witness = closure_witness(l0);
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        j["faces"] = fc.size();
        j["l0"] = l0_to_json(l0, fc);
        j["two_component_condition"] = two_component_condition(fc);
        j["closure"] = closure_to_json(witness);
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << "faces: " << fc.size() << ", sign vectors: " << l0.size() << "  [seed " << cfg.seed
       << "]\n";
    for (int i = 0; i < l0.size(); ++i) {
        os << "  " << l0.elements[static_cast<size_t>(i)].to_string() << "  <-";
        for (int f : l0.fibers[static_cast<size_t>(i)]) os << " " << fc.face(f).label;
        os << "\n";
    }
    os << "two-component condition: " << (two_component_condition(fc) ? "yes" : "no") << "\n";
    if (witness)
        os << "closure: Witness  " << witness->u.to_string() << " * " << witness->v.to_string()
           << " = " << witness->product.to_string() << "  (outside the image)\n";
    else
        os << "closure: Closed\n";
    emit(cfg, os.str());
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, const std::string& product) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    ProductTable t;
    Json axioms = Json::array();
    std::ostringstream txt;
    if (product == "geometric") {
        t = geometric_table(fc, GeometricOptions{cfg.refinement_depth});
        if (auto v = check_alternative_lrb(t)) {
            axioms.push_back(violation_to_json(*v, t));
            txt << "alternative LRB axioms: VIOLATED (" << to_string(v->kind) << ")\n";
        } else {
            txt << "alternative LRB axioms: ok\n";
        }
        if (auto v = check_associativity(t)) {
            Json jv = violation_to_json(*v, t);
            jv["note"] = "geometric product need not be associative";
            axioms.push_back(jv);
            txt << "associativity: fails at (" << t.labels[static_cast<size_t>(v->witness[0])]
                << ", " << t.labels[static_cast<size_t>(v->witness[1])] << ", "
                << t.labels[static_cast<size_t>(v->witness[2])] << ")\n";
        } else {
            txt << "associativity: ok\n";
        }
    } else {
        L0Set l0 = sign_image(fc);
        t = associative_table(fc, l0, canonical_choice(fc, l0));
        if (auto v = check_associativity(t)) {
            axioms.push_back(violation_to_json(*v, t));
            txt << "associativity: VIOLATED\n";
        } else {
            txt << "associativity: ok\n";
        }
        if (auto v = check_aperiodicity(t)) {
            axioms.push_back(violation_to_json(*v, t));
            txt << "aperiodicity (x^2 = x^3): VIOLATED\n";
        } else {
            txt << "aperiodicity (x^2 = x^3): ok\n";
        }
    }
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        j["product"] = product;
        j["table"] = table_to_json(t);
        j["axiom_reports"] = axioms;
        emit(cfg, j.dump(2) + "\n");
    } else {
        emit(cfg, table_grid(t) + txt.str());
    }
    return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    L0Set l0 = sign_image(fc);
    bool twocomp = two_component_condition(fc);
    auto witness = closure_witness(l0);

    Json j = meta(cfg, arr);
    std::ostringstream os;
    bool violated = false;

    j["two_component_condition"] = twocomp;
    j["closure"] = closure_to_json(witness);
    os << "two-component condition: " << (twocomp ? "yes" : "no") << "\n";
    os << "closure: " << (witness ? "Witness" : "Closed") << "\n";
    if (twocomp && witness) {
        violated = true;
        os << "VIOLATION: two-component condition holds but the sign image is not closed\n";
    }

    if (!witness) {
        ProductTable lt = l0_table(l0);
        if (auto v = check_lrb_axioms(lt)) {
            violated = true;
            j["l0_lrb"] = violation_to_json(*v, lt);
            os << "VIOLATION: L0 band axioms fail (" << to_string(v->kind) << ")\n";
        } else {
            j["l0_lrb"] = "ok";
            os << "L0 band axioms: ok\n";
        }
        ChoiceFunction cf = canonical_choice(fc, l0);
        ProductTable at = associative_table(fc, l0, cf);
        if (auto v = check_associativity(at)) {
            violated = true;
            j["associative_product"] = violation_to_json(*v, at);
            os << "VIOLATION: associative product is not associative\n";
        } else if (auto v2 = check_aperiodicity(at)) {
            violated = true;
            j["associative_product"] = violation_to_json(*v2, at);
            os << "VIOLATION: aperiodicity (x^2 = x^3) fails\n";
        } else {
            j["associative_product"] = "ok";
            os << "associative product: associative, aperiodic\n";
        }
    }

    ProductTable gt = geometric_table(fc, GeometricOptions{cfg.refinement_depth});
    if (auto v = check_alternative_lrb(gt)) {
        violated = true;
        j["geometric_product"] = violation_to_json(*v, gt);
        os << "VIOLATION: geometric product fails the alternative LRB axioms ("
           << to_string(v->kind) << ")\n";
    } else {
        bool assoc = !check_associativity(gt).has_value();
        j["geometric_product"] =
            Json{{"alternative_lrb", "ok"}, {"associative", assoc}};
        os << "geometric product: alternative LRB ok, "
           << (assoc ? "associative" : "not associative") << "\n";
    }

    if (auto cert = find_embedding_obstruction(gt)) {
        j["embedding_obstruction"] = Json{{"a", gt.labels[static_cast<size_t>(cert->a)]},
                                          {"b", gt.labels[static_cast<size_t>(cert->b)]},
                                          {"c", gt.labels[static_cast<size_t>(cert->c)]},
                                          {"d", gt.labels[static_cast<size_t>(cert->d)]}};
        os << "embedding obstruction: certificate (" << gt.labels[static_cast<size_t>(cert->a)]
           << ", " << gt.labels[static_cast<size_t>(cert->b)] << ", "
           << gt.labels[static_cast<size_t>(cert->c)] << ", "
           << gt.labels[static_cast<size_t>(cert->d)]
           << ") - the geometric band embeds in no power of the three-element band\n";
    } else {
        j["embedding_obstruction"] = nullptr;
        os << "embedding obstruction: none found\n";
    }

    j["violations"] = violated;
    if (cfg.format == "json")
        emit(cfg, j.dump(2) + "\n");
    else
        emit(cfg, os.str());
    return violated ? kExitPropertyViolation : kExitOk;
}

int cmd_restrict(const RunConfig& cfg, const std::string& component) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    int h = arr.index_of_label(component);
    if (h < 0) throw std::invalid_argument("unknown component label '" + component + "'");
    FaceComplex fc = decompose(arr);
    EmbeddingReport rep = embedding_map(fc, h);
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        j["embedding"] = embedding_to_json(rep, fc);
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << "restriction to " << arr[h].label << " (" << (rep.pointed.oval ? "oval" : "unbounded")
       << ", " << rep.pointed.points.size() << " marked points)  [seed " << cfg.seed << "]\n";
    for (size_t m = 0; m < rep.face_map.size(); ++m)
        os << "  " << rep.band.face_names[m] << "  i_H=" << rep.band.vectors[m].to_string()
           << "  ->  " << fc.face(rep.face_map[m]).label
           << "  i_A=" << rep.ambient_vectors[m].to_string() << "\n";
    for (const auto& law : rep.laws) {
        os << "  coordinate " << arr[law.coordinate].label << ": ";
        switch (law.kind) {
            case CoordinateLaw::Kind::ZeroCoordinate: os << "zero"; break;
            case CoordinateLaw::Kind::Constant:
                os << "constant " << to_char(law.constant);
                break;
            case CoordinateLaw::Kind::SignedProduct:
                os << "signed product, scalar " << (law.scalar > 0 ? "+1" : "-1") << ", factors";
                for (auto& [i, m] : law.factors) os << " (p" << i << ")^" << m;
                break;
        }
        os << "\n";
    }
    os << "product preserving: " << (rep.product_preserving ? "yes" : "no") << "\n";
    emit(cfg, os.str());
    return kExitOk;
}

int cmd_chambers(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    auto rows = deletion_restriction_report(fc);
    bool all_ok = true;
    for (const auto& r : rows)
        if (!r.cl_identity || !r.split_counts_ok) all_ok = false;
    if (cfg.format == "json") {
        Json j = meta(cfg, arr);
        j["chambers"] = static_cast<int>(fc.chambers().size());
        j["rows"] = chamber_rows_to_json(rows);
        j["identity_holds"] = all_ok;
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "|C(A)| = " << fc.chambers().size() << "  [seed " << cfg.seed << "]\n";
        os << "H     |C(A)| |C(A^H)| |C(A_H)| |b(H)|  CL-identity  classical\n";
        for (const auto& r : rows) {
            os << r.label << "     " << r.chambers_full << "      " << r.chambers_deleted
               << "        " << r.restricted_sections << "        " << r.bound_count << "      "
               << (r.cl_identity ? "holds" : "FAILS") << "        "
               << (r.classical_identity ? "holds" : "fails") << "\n";
        }
        emit(cfg, os.str());
    }
    return all_ok ? kExitOk : kExitPropertyViolation;
}

int cmd_render(const RunConfig& cfg) {
    Arrangement arr = load_arrangement_file(cfg.input_path);
    FaceComplex fc = decompose(arr);
    emit(cfg, "<!-- seed " + std::to_string(cfg.seed) + " -->\n" + render_svg(fc));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clband: exact bands and chamber counts of conic-line arrangements"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("CLBAND_REFINEMENT_DEPTH")) cfg.refinement_depth = std::atoi(env);
    app.add_option("--seed", cfg.seed, "seed recorded in outputs (reproducibility)");
    app.add_option("--refinement-depth", cfg.refinement_depth,
                   "effort cap for certified comparisons")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output_path, "write output to a file");

    std::string product = "geometric";
    std::string component;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("input", cfg.input_path, "arrangement JSON file")->required();
        if (with_format)
            sub->add_option("--format", cfg.format, "output format")
                ->check(CLI::IsMember({"text", "json", "dot", "svg"}));
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the arrangement definition");
    add_common(validate_cmd);
    CLI::App* faces_cmd = app.add_subcommand("faces", "face decomposition and closure order");
    add_common(faces_cmd);
    CLI::App* signs_cmd = app.add_subcommand("signs", "sign vectors, fibers, closure check");
    add_common(signs_cmd);
    CLI::App* table_cmd = app.add_subcommand("table", "face product table");
    add_common(table_cmd);
    table_cmd->add_option("--product", product, "geometric|associative")
        ->check(CLI::IsMember({"geometric", "associative"}));
    CLI::App* check_cmd = app.add_subcommand("check", "full property battery");
    add_common(check_cmd);
    CLI::App* restrict_cmd = app.add_subcommand("restrict", "pointed-curve band and embedding");
    add_common(restrict_cmd);
    restrict_cmd->add_option("--component", component, "curve label")->required();
    CLI::App* chambers_cmd = app.add_subcommand("chambers", "deletion-restriction chamber table");
    add_common(chambers_cmd);
    CLI::App* render_cmd = app.add_subcommand("render", "SVG rendering");
    add_common(render_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(cfg);
        if (faces_cmd->parsed()) return cmd_faces(cfg);
        if (signs_cmd->parsed()) return cmd_signs(cfg);
        if (table_cmd->parsed()) return cmd_table(cfg, product);
        if (check_cmd->parsed()) return cmd_check(cfg);
        if (restrict_cmd->parsed()) return cmd_restrict(cfg, component);
        if (chambers_cmd->parsed()) return cmd_chambers(cfg);
        if (render_cmd->parsed()) return cmd_render(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const AmbiguousTieError& e) {
        std::cerr << e.what() << "\n";
        return kExitAmbiguousTie;
    } catch (const ComponentNotRestrictableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const NotClosedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
