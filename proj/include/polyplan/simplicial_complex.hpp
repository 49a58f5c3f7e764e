#pragma once

/// Abstract simplicial complexes on vertex set {1,...,m}, m <= 64, stored as
/// an antichain of maximal faces in 64-bit masks (bit v-1 <=> vertex v).
/// Provides the two weighted invariants of the polyhedral product G^K:
///   max_face_weight       max over faces of the summed vertex weights
///                         (the LS-category value when weights are factor
///                         categories)
///   max_face_pair_weight  max over face *pairs* of the weight of the union
///                         (the topological-complexity value)

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyplan/errors.hpp"

namespace polyplan {

/// A face as a vertex bitmask; bit v-1 set <=> vertex v is in the face.
using Face = std::uint64_t;

/// Per-vertex nonnegative integer weights (factor LS categories).
using Weights = std::vector<int>;

/// Unvalidated input: vertex count plus 1-based vertex lists.
struct RawComplex {
    int m = 0;
    std::vector<std::vector<int>> maximal_faces;
};

int face_size(Face f);
int face_weight(Face f, const Weights& w);

/// Lexicographic order on ascending vertex lists; the empty face is least.
bool face_lex_less(Face a, Face b);

/// 1-based ascending vertex list.
std::vector<int> face_vertices(Face f);

/// Build a mask from 1-based vertices; rejects out-of-range and duplicates.
Face face_from_vertices(const std::vector<int>& vertices, int m);

class SimplicialComplex {
   public:
    static constexpr int kMaxVertices = 64;

    /// Normalizes the input: faces sorted, maximal antichain enforced.
    /// A listed face contained in another is an error unless prune_redundant
    /// is set, in which case it is dropped. Listed empty faces are ignored
    /// (the empty face is a member of every complex). Vertices lying in no
    /// face are permitted and flagged in warnings().
    static SimplicialComplex validate(const RawComplex& raw, bool prune_redundant = false);

    int vertex_count() const { return m_; }

    /// Maximal faces, lexicographically sorted. May be empty (the complex
    /// consisting of the empty face alone).
    const std::vector<Face>& maximal_faces() const { return maximal_; }

    const std::vector<std::string>& warnings() const { return warnings_; }

    /// True iff f is a face of the complex (the empty face always is).
    bool contains(Face f) const;

    /// Downward closure including the empty face, lexicographic order.
    /// Cost is sum over maximal faces of 2^|face|; intended for small m.
    std::vector<Face> enumerate_faces() const;

   private:
    int m_ = 0;
    std::vector<Face> maximal_;
    std::vector<std::string> warnings_;
};

/// max over faces of face_weight. The maximum is attained on a maximal face,
/// so only those are scanned. Throws on weight-length mismatch.
int max_face_weight(const SimplicialComplex& K, const Weights& w);

/// max over ordered face pairs of the weight of the union, attained on
/// maximal faces; only maximal pairs are scanned.
int max_face_pair_weight(const SimplicialComplex& K, const Weights& w);

/// Lexicographically least attaining face among the empty face and the
/// maximal faces (deterministic reporting companion to max_face_weight).
Face max_face_witness(const SimplicialComplex& K, const Weights& w);

/// Lexicographically least attaining ordered pair among (empty, empty) and
/// pairs of maximal faces.
std::pair<Face, Face> max_face_pair_witness(const SimplicialComplex& K, const Weights& w);

}  // namespace polyplan
