#pragma once

/// The global reserved motion planner on G^K x G^K. Each row (vertex) of a
/// configuration pair is classified by its closed-condition count; the counts
/// form the pair's partition cell, and their total is the domain index j.
/// The planned path moves every row through three phases:
///
///   hold at from[i]        on [0, 1/2 - d(from[i],e)/(2*diam)]
///   move from[i] -> to[i]  at uniform parameter speed via the row's section
///   hold at to[i]          on [1/2 + d(to[i],e)/(2*diam), 1]
///
/// Rows with from[i] = e hold exactly until t = 1/2, rows with to[i] = e
/// arrive exactly at t = 1/2 (the offsets compute to 0.5 bit-exactly when the
/// distances are 0), so the path's support is inside the start face on
/// [0, 1/2] and inside the end face on [1/2, 1], with off-face coordinates
/// bit-identical to the identity. The hold branches return stored elements,
/// making the endpoints exact as well.

#include <utility>
#include <vector>

#include "polyplan/group_planner.hpp"
#include "polyplan/polyhedral_product.hpp"

namespace polyplan {

/// Per-row closed-condition counts (j_1, ..., j_m).
struct CellLabel {
    std::vector<int> rows;

    int total() const;

    friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Classify a configuration pair. Throws if either side is not in G^K.
CellLabel domain_index(const Configuration& from, const Configuration& to,
                       const std::vector<GroupModel>& models, const SimplicialComplex& K);

struct RowSchedule {
    int count = 0;          // closed conditions produced by this row
    double dist_from = 0.0; // d(from[i], e)
    double dist_to = 0.0;   // d(to[i], e)
    double hold_until = 0.0;
    double arrive_at = 1.0;
    GroupElement rel;       // to[i]^-1 * from[i]
};

class PlannedPath {
   public:
    const Configuration& start() const { return start_; }
    const Configuration& end() const { return end_; }
    const CellLabel& cell() const { return cell_; }
    const std::vector<RowSchedule>& schedule() const { return rows_; }
    const std::vector<GroupModel>& models() const { return models_; }

    GroupElement row_at(std::size_t i, double t) const;
    Configuration at(double t) const;

   private:
    friend PlannedPath plan(const Configuration&, const Configuration&,
                            const std::vector<GroupModel>&, const SimplicialComplex&);

    std::vector<GroupModel> models_;
    Configuration start_;
    Configuration end_;
    CellLabel cell_;
    std::vector<RowSchedule> rows_;
};

/// Build the planned path for a valid pair. Throws ValidationError when a
/// configuration is not a member of G^K.
PlannedPath plan(const Configuration& from, const Configuration& to,
                 const std::vector<GroupModel>& models, const SimplicialComplex& K);

/// For two distinct cells of equal total, returns 0-based indices (l, q) with
/// rows[l] < other[l] and other[q] < rows[q]; the membership of row l in the
/// cover pair-set separates the closures of the two cells. Throws
/// std::invalid_argument if the cells are equal or the totals differ.
std::pair<int, int> separation_witness(const CellLabel& a, const CellLabel& b);

}  // namespace polyplan
