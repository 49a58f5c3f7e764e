#include "polyplan/json_io.hpp"

#include <fstream>

namespace polyplan {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return j;
}

RawComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("maximal_faces")) {
        throw ValidationError("complex file must be {\"m\": int, \"maximal_faces\": [[...]]}");
    }
    if (!j["m"].is_number_integer()) throw ValidationError("complex field \"m\" must be an integer");
    RawComplex raw;
    raw.m = j["m"].get<int>();
    if (!j["maximal_faces"].is_array()) {
        throw ValidationError("complex field \"maximal_faces\" must be an array of faces");
    }
    for (const auto& fj : j["maximal_faces"]) {
        if (!fj.is_array()) throw ValidationError("each face must be an array of vertices");
        std::vector<int> face;
        for (const auto& vj : fj) {
            if (!vj.is_number_integer()) throw ValidationError("vertices must be integers");
            face.push_back(vj.get<int>());
        }
        raw.maximal_faces.push_back(std::move(face));
    }
    return raw;
}

GroupModel group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ValidationError("group factor must be an object with a string \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "circle") return GroupModel::circle();
    if (kind == "sphere3") return GroupModel::sphere3();
    if (kind == "product") {
        if (!j.contains("of") || !j["of"].is_array()) {
            throw ValidationError("product group needs an \"of\" array of factors");
        }
        std::vector<GroupModel> factors;
        for (const auto& fj : j["of"]) factors.push_back(group_from_json(fj));
        return GroupModel::product(std::move(factors));
    }
    throw ValidationError("unknown group kind \"" + kind +
                          "\" (expected circle, sphere3 or product)");
}

std::vector<GroupModel> groups_from_json(const json& j) {
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
        throw ValidationError("groups file must be {\"factors\": [...]}");
    }
    std::vector<GroupModel> models;
    for (const auto& fj : j["factors"]) models.push_back(group_from_json(fj));
    return models;
}

json group_to_json(const GroupModel& g) {
    switch (g.kind()) {
        case GroupModel::Kind::Circle:
            return json{{"kind", "circle"}};
        case GroupModel::Kind::Sphere3:
            return json{{"kind", "sphere3"}};
        case GroupModel::Kind::Product: {
            json of = json::array();
            for (const auto& f : g.factors()) of.push_back(group_to_json(f));
            return json{{"kind", "product"}, {"of", std::move(of)}};
        }
    }
    return {};
}

GroupElement element_from_json(const json& j, const GroupModel& g) {
    const char* tag = nullptr;
    switch (g.kind()) {
        case GroupModel::Kind::Circle:
            tag = "circle";
            break;
        case GroupModel::Kind::Sphere3:
            tag = "sphere3";
            break;
        case GroupModel::Kind::Product:
            tag = "product";
            break;
    }
    if (!j.is_object() || !j.contains(tag)) {
        throw ValidationError(std::string("element does not match its group (expected \"") + tag +
                              "\")");
    }
    const json& body = j.at(tag);
    if (!body.is_array()) throw ValidationError("element payload must be an array");

    if (g.kind() == GroupModel::Kind::Product) {
        if (body.size() != g.factors().size()) {
            throw ValidationError("product element arity does not match its factors");
        }
        std::vector<GroupElement> parts;
        for (std::size_t i = 0; i < g.factors().size(); ++i) {
            parts.push_back(element_from_json(body[i], g.factors()[i]));
        }
        return g.join(parts);
    }
    std::vector<double> coords;
    for (const auto& c : body) {
        if (!c.is_number()) throw ValidationError("element coordinates must be numbers");
        coords.push_back(c.get<double>());
    }
    return g.normalized(std::move(coords));
}

json element_to_json(const GroupElement& a, const GroupModel& g) {
    switch (g.kind()) {
        case GroupModel::Kind::Circle:
            return json{{"circle", a.coords}};
        case GroupModel::Kind::Sphere3:
            return json{{"sphere3", a.coords}};
        case GroupModel::Kind::Product: {
            json parts = json::array();
            const auto split = g.split(a);
            for (std::size_t i = 0; i < split.size(); ++i) {
                parts.push_back(element_to_json(split[i], g.factors()[i]));
            }
            return json{{"product", std::move(parts)}};
        }
    }
    return {};
}

Configuration configuration_from_json(const json& j, const std::vector<GroupModel>& models,
                                      int m) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
        throw ValidationError("configuration file must be {\"elements\": [...], \"face\"?: [...]}");
    }
    const json& elems = j["elements"];
    if (elems.size() != models.size()) {
        throw ValidationError("configuration has " + std::to_string(elems.size()) +
                              " elements, expected " + std::to_string(models.size()));
    }
    Configuration cfg;
    for (std::size_t i = 0; i < models.size(); ++i) {
        cfg.elements.push_back(element_from_json(elems[i], models[i]));
    }
    if (j.contains("face")) {
        if (!j["face"].is_array()) throw ValidationError("\"face\" must be an array of vertices");
        std::vector<int> verts;
        for (const auto& vj : j["face"]) {
            if (!vj.is_number_integer()) throw ValidationError("vertices must be integers");
            verts.push_back(vj.get<int>());
        }
        cfg.declared_face = face_from_vertices(verts, m);
    }
    return cfg;
}

json configuration_to_json(const Configuration& cfg, const std::vector<GroupModel>& models) {
    json elems = json::array();
    for (std::size_t i = 0; i < models.size(); ++i) {
        elems.push_back(element_to_json(cfg.elements[i], models[i]));
    }
    json out{{"elements", std::move(elems)}};
    if (cfg.declared_face) out["face"] = face_vertices(*cfg.declared_face);
    return out;
}

namespace {

json counter_to_json(const CheckCounter& c) {
    return json{{"checked", c.checked}, {"failed", c.failed}};
}

}  // namespace

json report_to_json(const CoverReport& report, const std::vector<GroupModel>& models) {
    json j;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["formula_bound"] = report.formula_bound;
    j["max_j_observed"] = report.max_j_observed;
    j["histogram"] = report.histogram;
    j["witness"] = json{{"from", configuration_to_json(report.witness_from, models)},
                        {"to", configuration_to_json(report.witness_to, models)},
                        {"cell", report.witness_cell.rows},
                        {"j", report.witness_j},
                        {"attains_bound", report.witness_attains}};
    j["checks"] = json{{"diagonal_in_w0", counter_to_json(report.diagonal_in_w0)},
                       {"stasis", counter_to_json(report.stasis)},
                       {"endpoints", counter_to_json(report.endpoints)},
                       {"containment", counter_to_json(report.containment)},
                       {"continuity", counter_to_json(report.continuity)},
                       {"separation", counter_to_json(report.separation)},
                       {"offdiagonal_wj", counter_to_json(report.offdiagonal_wj)}};
    j["all_pass"] = report.all_pass();
    return j;
}

}  // namespace polyplan
