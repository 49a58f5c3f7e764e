#include "polyplan/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace polyplan {

int face_size(Face f) { return std::popcount(f); }

int face_weight(Face f, const Weights& w) {
    int sum = 0;
    while (f != 0) {
        const int i = std::countr_zero(f);
        sum += w[static_cast<std::size_t>(i)];
        f &= f - 1;
    }
    return sum;
}

bool face_lex_less(Face a, Face b) {
    // Compare as ascending vertex sequences. Walk common low bits; the first
    // position where the sets differ decides, with "ran out of vertices"
    // (prefix) ranking below a larger continuation.
    while (a != 0 && b != 0) {
        const int va = std::countr_zero(a);
        const int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    while (f != 0) {
        out.push_back(std::countr_zero(f) + 1);
        f &= f - 1;
    }
    return out;
}

Face face_from_vertices(const std::vector<int>& vertices, int m) {
    Face f = 0;
    for (int v : vertices) {
        if (v < 1 || v > m) {
            std::ostringstream msg;
            msg << "vertex " << v << " out of range 1.." << m;
            throw ValidationError(msg.str());
        }
        const Face bit = Face{1} << (v - 1);
        if (f & bit) {
            std::ostringstream msg;
            msg << "duplicate vertex " << v << " within a face";
            throw ValidationError(msg.str());
        }
        f |= bit;
    }
    return f;
}

namespace {

std::string face_to_string(Face f) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << ']';
    return out.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::validate(const RawComplex& raw, bool prune_redundant) {
    if (raw.m < 1) throw ValidationError("vertex count m must be positive");
    if (raw.m > kMaxVertices) {
        std::ostringstream msg;
        msg << "vertex count m = " << raw.m << " exceeds the supported limit " << kMaxVertices;
        throw ValidationError(msg.str());
    }

    std::vector<Face> faces;
    for (const auto& listed : raw.maximal_faces) {
        const Face f = face_from_vertices(listed, raw.m);
        if (f == 0) continue;  // the empty face is implicit, never rejected
        faces.push_back(f);
    }

    // Enforce the antichain property.
    std::vector<Face> kept;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < faces.size() && !redundant; ++j) {
            if (i == j) continue;
            const bool subset = (faces[i] & ~faces[j]) == 0;
            // For equal faces keep the first occurrence only.
            if (subset && (faces[i] != faces[j] || j < i)) redundant = true;
        }
        if (redundant && !prune_redundant) {
            for (std::size_t j = 0; j < faces.size(); ++j) {
                if (i != j && (faces[i] & ~faces[j]) == 0) {
                    throw ValidationError("face " + face_to_string(faces[i]) +
                                          " is contained in face " + face_to_string(faces[j]) +
                                          " (redundant; rerun with pruning to drop it)");
                }
            }
        }
        if (!redundant) kept.push_back(faces[i]);
    }

    std::sort(kept.begin(), kept.end(), face_lex_less);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    SimplicialComplex K;
    K.m_ = raw.m;
    K.maximal_ = std::move(kept);

    Face used = 0;
    for (Face f : K.maximal_) used |= f;
    const Face all = (raw.m == 64) ? ~Face{0} : ((Face{1} << raw.m) - 1);
    if (used != all) {
        K.warnings_.push_back("ghost vertices (in no face): " + face_to_string(all & ~used));
    }
    return K;
}

bool SimplicialComplex::contains(Face f) const {
    if (f == 0) return true;
    for (Face mf : maximal_) {
        if ((f & ~mf) == 0) return true;
    }
    return false;
}

std::vector<Face> SimplicialComplex::enumerate_faces() const {
    std::set<Face, bool (*)(Face, Face)> out(face_lex_less);
    out.insert(0);
    for (Face mf : maximal_) {
        for (Face sub = mf;; sub = (sub - 1) & mf) {
            out.insert(sub);
            if (sub == 0) break;
        }
    }
    return {out.begin(), out.end()};
}

namespace {

void check_weights(const SimplicialComplex& K, const Weights& w) {
    if (static_cast<int>(w.size()) != K.vertex_count()) {
        std::ostringstream msg;
        msg << "weight vector length " << w.size() << " does not match vertex count "
            << K.vertex_count();
        throw ValidationError(msg.str());
    }
    for (int wi : w) {
        if (wi < 0) throw ValidationError("weights must be nonnegative");
    }
}

}  // namespace

int max_face_weight(const SimplicialComplex& K, const Weights& w) {
    check_weights(K, w);
    int best = 0;
    for (Face f : K.maximal_faces()) best = std::max(best, face_weight(f, w));
    return best;
}

int max_face_pair_weight(const SimplicialComplex& K, const Weights& w) {
    check_weights(K, w);
    int best = 0;
    const auto& faces = K.maximal_faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i; j < faces.size(); ++j) {
            best = std::max(best, face_weight(faces[i] | faces[j], w));
        }
    }
    return best;
}

Face max_face_witness(const SimplicialComplex& K, const Weights& w) {
    check_weights(K, w);
    Face best_face = 0;
    int best = 0;
    for (Face f : K.maximal_faces()) {
        const int v = face_weight(f, w);
        if (v > best) {
            best = v;
            best_face = f;
        }
    }
    return best_face;
}

std::pair<Face, Face> max_face_pair_witness(const SimplicialComplex& K, const Weights& w) {
    check_weights(K, w);
    std::pair<Face, Face> best_pair{0, 0};
    int best = 0;
    const auto& faces = K.maximal_faces();
    // Faces are lex-sorted, so scanning i <= j in order and updating only on
    // strict improvement yields the lex-least attaining ordered pair.
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i; j < faces.size(); ++j) {
            const int v = face_weight(faces[i] | faces[j], w);
            if (v > best) {
                best = v;
                best_pair = {faces[i], faces[j]};
            }
        }
    }
    return best_pair;
}

}  // namespace polyplan
