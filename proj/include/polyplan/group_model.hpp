#pragma once

/// Concrete metric group models with categorical covers and contractions:
/// the data a reserved motion planner consumes. Three kinds are provided:
///
///   Circle   unit complex numbers (x, y); geodesic angle metric, diameter
///            pi, category 1. Cover: N_0 = S^1 \ {-1} contracting to 1 along
///            the shortest arc; N_1 = S^1 \ {1} contracting first to -1 along
///            the shortest arc inside N_1, then to 1 along the fixed lower
///            semicircle through -i.
///   Sphere3  unit quaternions (w, x, y, z); great-circle metric, diameter
///            pi, category 1. Cover: N_0 = S^3 \ {-1} contracting to 1 along
///            the great circle; N_1 = S^3 \ {1} contracting first to -1, then
///            to 1 along the embedded circle (cos a, sin a, 0, 0).
///   Product  componentwise structure; metric is the sum of factor metrics,
///            diameter and category are the sums. Cover set N_j collects the
///            elements whose per-factor least cover indices sum to j (these
///            sets are disjoint by construction, and not open). The
///            contraction runs every factor's own contraction simultaneously.
///
/// Exactness contract relied on throughout the planner: multiplying by a
/// stored identity or antipode element is bit-exact, d(a, a) == 0.0, and the
/// k = 0 contraction fixes the identity bit-exactly.

#include <cstddef>
#include <vector>

#include "polyplan/rng.hpp"

namespace polyplan {

/// Flattened coordinates; interpretation belongs to the owning GroupModel
/// (circle: 2 doubles, sphere3: 4, product: concatenation of factors).
struct GroupElement {
    std::vector<double> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupModel {
   public:
    enum class Kind { Circle, Sphere3, Product };

    static GroupModel circle();
    static GroupModel sphere3();
    static GroupModel product(std::vector<GroupModel> factors);

    Kind kind() const { return kind_; }
    /// Declared LS category (leaf models: 1; products: sum of factors).
    int cat() const { return cat_; }
    double diameter() const { return diameter_; }
    std::size_t coord_count() const { return coord_count_; }
    const std::vector<GroupModel>& factors() const { return factors_; }

    GroupElement identity() const;
    /// The point farthest from the identity (-1 per sphere factor).
    GroupElement antipode() const;

    /// Checks arity and rescales each leaf block to unit norm. Rejects
    /// non-finite input and blocks of near-zero norm.
    GroupElement normalized(std::vector<double> raw) const;

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;

    /// Geodesic metric; symmetric, left-invariant, bounded by diameter().
    double distance(const GroupElement& a, const GroupElement& b) const;

    int cover_sets() const { return cat_ + 1; }
    /// Membership in N_k. Strict floating comparisons, no epsilon.
    bool in_cover_set(int k, const GroupElement& a) const;
    /// Least k with a in N_k; throws if the cover misses a (broken model).
    int least_cover_index(const GroupElement& a) const;
    /// The contraction H_k: N_k x [0,1] -> G with H_k(a,0)=a, H_k(a,1)=e.
    /// Precondition: a in N_k.
    GroupElement contract(int k, const GroupElement& a, double t) const;

    /// Uniform sample (uniform angle / Haar via normalized Gaussians).
    GroupElement sample(Rng& rng) const;

    /// Split a product element into factor elements (leaf: singleton).
    std::vector<GroupElement> split(const GroupElement& a) const;
    GroupElement join(const std::vector<GroupElement>& parts) const;

   private:
    GroupModel() = default;

    Kind kind_ = Kind::Circle;
    int cat_ = 1;
    double diameter_ = 0.0;
    std::size_t coord_count_ = 0;
    std::vector<GroupModel> factors_;
};

/// Total coordinate count of a factor list (one model per complex vertex).
std::size_t total_coords(const std::vector<GroupModel>& models);

}  // namespace polyplan
