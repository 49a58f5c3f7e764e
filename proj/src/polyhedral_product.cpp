#include "polyplan/polyhedral_product.hpp"

#include <sstream>

namespace polyplan {

namespace {

void check_arity(const Configuration& cfg, const std::vector<GroupModel>& models) {
    if (cfg.elements.size() != models.size()) {
        std::ostringstream msg;
        msg << "configuration has " << cfg.elements.size() << " elements, expected "
            << models.size();
        throw ValidationError(msg.str());
    }
}

std::string face_label(Face f) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace

Face support(const Configuration& cfg, const std::vector<GroupModel>& models) {
    check_arity(cfg, models);
    Face f = 0;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (!(cfg.elements[i] == models[i].identity())) f |= Face{1} << i;
    }
    return f;
}

bool is_member(const Configuration& cfg, const SimplicialComplex& K,
               const std::vector<GroupModel>& models) {
    if (static_cast<int>(models.size()) != K.vertex_count()) {
        throw ValidationError("group assignment arity does not match the complex");
    }
    return K.contains(support(cfg, models));
}

void validate_configuration(const Configuration& cfg, const SimplicialComplex& K,
                            const std::vector<GroupModel>& models) {
    check_arity(cfg, models);
    const Face sup = support(cfg, models);
    if (cfg.declared_face) {
        const Face decl = *cfg.declared_face;
        if (!K.contains(decl)) {
            throw ValidationError("declared face " + face_label(decl) +
                                  " is not a face of the complex");
        }
        if ((sup & ~decl) != 0) {
            throw ValidationError("support " + face_label(sup) +
                                  " is not contained in the declared face " + face_label(decl));
        }
    }
    if (!K.contains(sup)) {
        throw ValidationError("support " + face_label(sup) + " is not a face of the complex");
    }
}

Configuration sample_configuration(const SimplicialComplex& K,
                                   const std::vector<GroupModel>& models, Rng& rng) {
    if (static_cast<int>(models.size()) != K.vertex_count()) {
        throw ValidationError("group assignment arity does not match the complex");
    }
    Configuration cfg = identity_configuration(models);
    const auto& faces = K.maximal_faces();
    if (faces.empty()) {
        cfg.declared_face = Face{0};
        return cfg;
    }
    const Face f = faces[rng.uniform_int(faces.size())];
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (f & (Face{1} << i)) cfg.elements[i] = models[i].sample(rng);
    }
    cfg.declared_face = f;
    return cfg;
}

Configuration identity_configuration(const std::vector<GroupModel>& models) {
    Configuration cfg;
    cfg.elements.reserve(models.size());
    for (const auto& g : models) cfg.elements.push_back(g.identity());
    return cfg;
}

double configuration_distance(const Configuration& a, const Configuration& b,
                              const std::vector<GroupModel>& models) {
    check_arity(a, models);
    check_arity(b, models);
    double sum = 0.0;
    for (std::size_t i = 0; i < models.size(); ++i) {
        sum += models[i].distance(a.elements[i], b.elements[i]);
    }
    return sum;
}

}  // namespace polyplan
