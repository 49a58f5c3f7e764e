#pragma once

/// Row-level reserved motion planning on a single metric group. A pair (a, b)
/// is classified by its closed-condition count, the least k with b^-1 a in
/// the cover set N_k; that k selects the reserved section
///     s_k(a, b)(t) = b * H_k(b^-1 a, t),
/// a path from a to b whose k = 0 rule is constant on the diagonal. The
/// windowed form runs the section at uniform parameter speed inside
/// [0, (d(a,e) + d(b,e)) / (2 * diameter)] and then holds at b; the hold-at-b
/// branch returns the stored endpoint, so it is bit-exact.

#include <functional>

#include "polyplan/group_model.hpp"

namespace polyplan {

struct GroupPath {
    GroupElement start;
    GroupElement end;
    std::function<GroupElement(double)> at;  // total on [0, 1]
};

/// b^-1 a; bitwise-equal pairs yield the stored identity exactly, which the
/// diagonal stasis guarantee relies on.
GroupElement relative_element(const GroupModel& g, const GroupElement& a, const GroupElement& b);

/// Least k with b^-1 a in N_k; equivalently the index of the unique
/// disjointified set N_k \ (N_0 u ... u N_{k-1}) containing the pair.
int closed_condition_count(const GroupModel& g, const GroupElement& a, const GroupElement& b);

/// The section s_k above. Precondition: b^-1 a in N_k. The evaluator returns
/// the stored start exactly at t = 0.
GroupPath reserved_section(const GroupModel& g, int k, const GroupElement& a,
                           const GroupElement& b);

/// Reparametrized section: with d1 = d(from, e), d2 = d(to, e) and window
/// w = (d1 + d2) / (2 * diameter), runs reserved_section over [0, w) at
/// parameter speed 1/w and holds at `to` on [w, 1]. Degenerate d1 + d2 = 0
/// pairs give the constant path at `from`. Precondition:
/// closed_condition_count(g, from, to) == k.
GroupPath windowed_section(const GroupModel& g, int k, const GroupElement& from,
                           const GroupElement& to);

/// Shared evaluator core: value of s_k at time t given rel = b^-1 a.
/// Returns `a` itself at t <= 0.
GroupElement section_value(const GroupModel& g, int k, const GroupElement& a,
                           const GroupElement& b, const GroupElement& rel, double t);

}  // namespace polyplan
