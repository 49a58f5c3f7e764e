#include "polyplan/group_planner.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyplan {

GroupElement relative_element(const GroupModel& g, const GroupElement& a, const GroupElement& b) {
    if (a == b) return g.identity();
    return g.multiply(g.inverse(b), a);
}

int closed_condition_count(const GroupModel& g, const GroupElement& a, const GroupElement& b) {
    return g.least_cover_index(relative_element(g, a, b));
}

GroupElement section_value(const GroupModel& g, int k, const GroupElement& a,
                           const GroupElement& b, const GroupElement& rel, double t) {
    if (t <= 0.0) return a;
    return g.multiply(b, g.contract(k, rel, std::min(t, 1.0)));
}

GroupPath reserved_section(const GroupModel& g, int k, const GroupElement& a,
                           const GroupElement& b) {
    GroupElement rel = relative_element(g, a, b);
    if (!g.in_cover_set(k, rel)) {
        throw std::invalid_argument("pair is not in the requested local domain");
    }
    GroupPath path;
    path.start = a;
    path.end = b;
    path.at = [g, k, a, b, rel](double t) { return section_value(g, k, a, b, rel, t); };
    return path;
}

GroupPath windowed_section(const GroupModel& g, int k, const GroupElement& from,
                           const GroupElement& to) {
    if (closed_condition_count(g, from, to) != k) {
        throw std::invalid_argument("pair is not in the requested disjointified domain");
    }
    const GroupElement rel = relative_element(g, from, to);
    const double d1 = g.distance(from, g.identity());
    const double d2 = g.distance(to, g.identity());
    const double dsum = d1 + d2;
    const double window = std::clamp(dsum / (2.0 * g.diameter()), 0.0, 1.0);

    GroupPath path;
    path.start = from;
    path.end = to;
    if (dsum == 0.0) {
        GroupElement a = from;
        path.at = [a](double) { return a; };
        return path;
    }
    // Branches split as [0, window) / [window, 1]; at the window end both
    // agree analytically and the hold branch is taken, so the tail is the
    // stored endpoint bit-exactly.
    path.at = [g, k, from, to, rel, dsum, window](double t) {
        if (t >= window) return to;
        const double s = std::clamp(t * (2.0 * g.diameter()) / dsum, 0.0, 1.0);
        return section_value(g, k, from, to, rel, s);
    };
    return path;
}

}  // namespace polyplan
