#include "polyplan/product_planner.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyplan {

int CellLabel::total() const {
    int sum = 0;
    for (int r : rows) sum += r;
    return sum;
}

CellLabel domain_index(const Configuration& from, const Configuration& to,
                       const std::vector<GroupModel>& models, const SimplicialComplex& K) {
    validate_configuration(from, K, models);
    validate_configuration(to, K, models);
    CellLabel cell;
    cell.rows.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        cell.rows.push_back(closed_condition_count(models[i], from.elements[i], to.elements[i]));
    }
    return cell;
}

GroupElement PlannedPath::row_at(std::size_t i, double t) const {
    const RowSchedule& row = rows_[i];
    // Hold branches return the stored endpoints; when a row's endpoint is the
    // identity the corresponding offset is exactly 0.5, which the containment
    // guarantee depends on.
    if (t <= row.hold_until) return start_.elements[i];
    if (t >= row.arrive_at) return end_.elements[i];
    const double dsum = row.dist_from + row.dist_to;
    const double s =
        std::clamp((t - row.hold_until) * (2.0 * models_[i].diameter()) / dsum, 0.0, 1.0);
    return section_value(models_[i], row.count, start_.elements[i], end_.elements[i], row.rel, s);
}

Configuration PlannedPath::at(double t) const {
    Configuration out;
    out.elements.reserve(models_.size());
    for (std::size_t i = 0; i < models_.size(); ++i) out.elements.push_back(row_at(i, t));
    return out;
}

PlannedPath plan(const Configuration& from, const Configuration& to,
                 const std::vector<GroupModel>& models, const SimplicialComplex& K) {
    validate_configuration(from, K, models);
    validate_configuration(to, K, models);

    PlannedPath path;
    path.models_ = models;
    path.start_ = from;
    path.end_ = to;
    path.rows_.reserve(models.size());
    path.cell_.rows.reserve(models.size());

    for (std::size_t i = 0; i < models.size(); ++i) {
        const GroupModel& g = models[i];
        RowSchedule row;
        row.rel = relative_element(g, from.elements[i], to.elements[i]);
        row.count = g.least_cover_index(row.rel);
        row.dist_from = g.distance(from.elements[i], g.identity());
        row.dist_to = g.distance(to.elements[i], g.identity());
        const double half_span = 2.0 * g.diameter();
        row.hold_until = 0.5 - std::clamp(row.dist_from / half_span, 0.0, 0.5);
        row.arrive_at = 0.5 + std::clamp(row.dist_to / half_span, 0.0, 0.5);
        path.cell_.rows.push_back(row.count);
        path.rows_.push_back(std::move(row));
    }
    return path;
}

std::pair<int, int> separation_witness(const CellLabel& a, const CellLabel& b) {
    if (a.rows.size() != b.rows.size() || a == b || a.total() != b.total()) {
        throw std::invalid_argument(
            "separation witness needs two distinct cells with equal totals");
    }
    int lower = -1;  // a.rows[lower] < b.rows[lower]
    int upper = -1;  // b.rows[upper] < a.rows[upper]
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (lower < 0 && a.rows[i] < b.rows[i]) lower = static_cast<int>(i);
        if (upper < 0 && b.rows[i] < a.rows[i]) upper = static_cast<int>(i);
    }
    // Equal totals force both indices to exist.
    return {lower, upper};
}

}  // namespace polyplan
