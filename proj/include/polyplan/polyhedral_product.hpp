#pragma once

/// Points of the polyhedral product G^K: one group element per vertex, with
/// the support (coordinates different from the identity) constrained to a
/// face of K. Support uses exact comparison against the normalized identity;
/// the planner keeps off-face coordinates bit-identical to it.

#include <optional>
#include <vector>

#include "polyplan/group_model.hpp"
#include "polyplan/rng.hpp"
#include "polyplan/simplicial_complex.hpp"

namespace polyplan {

struct Configuration {
    std::vector<GroupElement> elements;
    std::optional<Face> declared_face;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.elements == b.elements;
    }
};

/// {i : elements[i] != identity}, exact coordinate comparison.
Face support(const Configuration& cfg, const std::vector<GroupModel>& models);

/// True iff support(cfg) is a face of K. Throws on arity mismatch.
bool is_member(const Configuration& cfg, const SimplicialComplex& K,
               const std::vector<GroupModel>& models);

/// Full well-formedness check: arity, declared-face membership in K,
/// off-face coordinates exactly identity, support a face of K. Throws
/// ValidationError with the offending support on failure.
void validate_configuration(const Configuration& cfg, const SimplicialComplex& K,
                            const std::vector<GroupModel>& models);

/// Uniform maximal face, uniform factor samples inside it, identity
/// elsewhere. Deterministic given the rng state.
Configuration sample_configuration(const SimplicialComplex& K,
                                   const std::vector<GroupModel>& models, Rng& rng);

Configuration identity_configuration(const std::vector<GroupModel>& models);

/// Sum over vertices of the factor metrics.
double configuration_distance(const Configuration& a, const Configuration& b,
                              const std::vector<GroupModel>& models);

}  // namespace polyplan
