#pragma once

/// Sampling harness for every testable promise the planner makes: the
/// diagonal lands in the zero domain with a bit-exactly motionless path,
/// paths hit their endpoints, supports stay inside the start face until the
/// midpoint and inside the end face after it, same-total cells separate via
/// cover-set membership, nearby same-cell pairs plan nearby paths, and the
/// observed domain indices never exceed the combinatorial bound — which a
/// constructed antipode pair attains exactly.

#include <cstdint>
#include <utility>
#include <vector>

#include "polyplan/product_planner.hpp"

namespace polyplan {

struct CheckCounter {
    long checked = 0;
    long failed = 0;
};

struct CoverReport {
    std::uint64_t seed = 0;
    long trials = 0;
    int formula_bound = 0;
    int max_j_observed = 0;
    std::vector<long> histogram;  // domain indices of the random pair trials

    Configuration witness_from;
    Configuration witness_to;
    CellLabel witness_cell;
    int witness_j = 0;
    bool witness_attains = false;

    CheckCounter diagonal_in_w0;  // diagonal pairs classify to j = 0
    CheckCounter stasis;          // diagonal paths are motionless (exact, grid 257)
    CheckCounter endpoints;       // exact at t = 0, within 1e-6 at t = 1
    CheckCounter containment;     // support schedule with bit-exact identity off-face
    CheckCounter continuity;      // same-cell pairs at 1e-6 plan paths within 1e-3
    CheckCounter separation;      // distinct same-total cells split on a cover set
    CheckCounter offdiagonal_wj;  // pairs with j >= 1 are off the diagonal

    bool all_pass() const;
};

/// Run the full battery: `trials` random pair trials and diagonal trials,
/// plus min(trials, 1000) containment, continuity and separation trials.
/// Deterministic given (seed, trials, K, models); failures are counted, not
/// thrown.
CoverReport verify_fh_cover(const SimplicialComplex& K, const std::vector<GroupModel>& models,
                            long trials, std::uint64_t seed);

/// Grid check of the support schedule: support(path(t)) inside sigma1 for
/// t <= 1/2 and inside sigma2 for t >= 1/2, with off-face coordinates
/// bit-identical to the identity. grid_size must be odd and >= 3 so that
/// t = 1/2 is a grid point.
bool verify_containment(const PlannedPath& path, Face sigma1, Face sigma2, int grid_size);

/// Exhaustive all-face-pair maximum, the independent oracle for the
/// maximal-face scan. Restricted to m <= 12.
int max_face_pair_weight_oracle(const SimplicialComplex& K, const Weights& w);

/// Constructed pair attaining the formula bound: antipodes on the argmax
/// face pair (second column only where it does not cancel the first).
std::pair<Configuration, Configuration> attainment_witness(const SimplicialComplex& K,
                                                           const std::vector<GroupModel>& models);

/// Declared categories of the factor models, in vertex order.
Weights model_weights(const std::vector<GroupModel>& models);

}  // namespace polyplan
