#include "polyplan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace polyplan {

namespace {

constexpr int kPathGrid = 257;
constexpr long kSampledCheckCap = 1000;
constexpr double kEndpointTol = 1e-6;
constexpr double kContinuityPairDist = 1e-6;
constexpr double kContinuityPathTol = 1e-3;

double grid_t(int i, int grid) { return static_cast<double>(i) / static_cast<double>(grid - 1); }

/// An element whose least cover index is exactly k, built from identity and
/// antipode blocks so that the group operations involving it stay bit-exact.
GroupElement element_with_least_index(const GroupModel& g, int k) {
    if (g.kind() != GroupModel::Kind::Product) return k == 0 ? g.identity() : g.antipode();
    std::vector<GroupElement> parts;
    int remaining = k;
    for (const auto& f : g.factors()) {
        const int kf = std::min(remaining, f.cat());
        parts.push_back(element_with_least_index(f, kf));
        remaining -= kf;
    }
    return g.join(parts);
}

/// Quarter-turn element of a leaf model (i on the circle, the quaternion i on
/// the 3-sphere); multiplication by it is bit-exact.
GroupElement quarter_turn(const GroupModel& g) {
    GroupElement q;
    q.coords.assign(g.coord_count(), 0.0);
    q.coords[1] = 1.0;
    return q;
}

/// Small left perturbation of a single leaf block by a rotation of angle
/// about `eps` in the geodesic metric.
GroupElement perturb_element(const GroupModel& g, const GroupElement& a, double eps, Rng& rng) {
    switch (g.kind()) {
        case GroupModel::Kind::Circle: {
            const double phi = eps * rng.uniform(-1.0, 1.0);
            GroupElement rot{{std::cos(phi), std::sin(phi)}};
            return g.multiply(a, rot);
        }
        case GroupModel::Kind::Sphere3: {
            const double phi = eps * rng.uniform(-1.0, 1.0);
            double axis[3];
            double norm = 0.0;
            do {
                norm = 0.0;
                for (double& c : axis) {
                    c = rng.normal();
                    norm += c * c;
                }
                norm = std::sqrt(norm);
            } while (norm < 1e-3);
            GroupElement rot{{std::cos(phi), std::sin(phi) * axis[0] / norm,
                              std::sin(phi) * axis[1] / norm, std::sin(phi) * axis[2] / norm}};
            return g.multiply(a, rot);
        }
        case GroupModel::Kind::Product: {
            std::vector<GroupElement> parts = g.split(a);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                parts[i] = perturb_element(g.factors()[i], parts[i], eps, rng);
            }
            return g.join(parts);
        }
    }
    return a;
}

int leaf_factor_count(const GroupModel& g) {
    if (g.kind() != GroupModel::Kind::Product) return 1;
    int n = 0;
    for (const auto& f : g.factors()) n += leaf_factor_count(f);
    return n;
}

struct RealizableCell {
    CellLabel cell;
    Face face1 = 0;
    Face face2 = 0;
};

/// Every per-row count vector supported on the union of a maximal face pair
/// is realizable; enumerate them all. Returns an empty list when the
/// enumeration would be too large (the sampled checks that need constructed
/// cells then fall back to random pairs).
std::vector<RealizableCell> enumerate_cells(const SimplicialComplex& K,
                                            const std::vector<GroupModel>& models) {
    std::vector<RealizableCell> out;
    std::set<std::vector<int>> seen;
    const auto& faces = K.maximal_faces();
    const std::size_t m = models.size();

    constexpr double kMaxCells = 4096.0;
    double worst = 1.0;
    Face widest = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i; j < faces.size(); ++j) {
            const Face u = faces[i] | faces[j];
            if (face_size(u) > face_size(widest)) widest = u;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (widest & (Face{1} << i)) worst *= models[i].cat() + 1;
        if (worst > kMaxCells) return out;
    }

    auto add_for_union = [&](Face f1, Face f2) {
        const Face u = f1 | f2;
        std::vector<int> counts(m, 0);
        while (seen.size() < static_cast<std::size_t>(kMaxCells) * 4) {
            if (seen.insert(counts).second) {
                out.push_back(RealizableCell{CellLabel{counts}, f1, f2});
            }
            // odometer over rows inside the union
            std::size_t i = 0;
            for (; i < m; ++i) {
                if (!(u & (Face{1} << i))) continue;
                if (counts[i] < models[i].cat()) {
                    ++counts[i];
                    break;
                }
                counts[i] = 0;
            }
            if (i == m) break;
        }
    };

    if (faces.empty()) {
        add_for_union(0, 0);
        return out;
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) add_for_union(faces[i], faces[j]);
    }
    return out;
}

/// A configuration pair realizing the given cell, with supports inside the
/// recorded face pair. Rows with positive counts use identity/antipode (or
/// quarter-turn) blocks, for which the count computation is bit-exact.
std::pair<Configuration, Configuration> construct_cell_pair(
    const RealizableCell& rc, const std::vector<GroupModel>& models, Rng& rng) {
    Configuration from = identity_configuration(models);
    Configuration to = identity_configuration(models);
    for (std::size_t i = 0; i < models.size(); ++i) {
        const GroupModel& g = models[i];
        const bool in1 = (rc.face1 & (Face{1} << i)) != 0;
        const bool in2 = (rc.face2 & (Face{1} << i)) != 0;
        const int k = rc.cell.rows[i];
        if (k == 0) {
            if (in1) from.elements[i] = g.sample(rng);
            if (in2) to.elements[i] = g.sample(rng);
            if (closed_condition_count(g, from.elements[i], to.elements[i]) != 0) {
                from.elements[i] = g.identity();
                to.elements[i] = g.identity();
            }
        } else if (in1 && in2 && g.kind() != GroupModel::Kind::Product && k == 1 &&
                   rng.uniform01() < 0.5) {
            // both columns off the identity: quarter turns whose relative
            // element is exactly the antipode
            GroupElement q = quarter_turn(g);
            from.elements[i] = q;
            to.elements[i] = g.inverse(q);
        } else if (in1) {
            from.elements[i] = element_with_least_index(g, k);
        } else {
            to.elements[i] = element_with_least_index(g, k);
        }
    }
    return {std::move(from), std::move(to)};
}

void record(CheckCounter& counter, bool ok) {
    ++counter.checked;
    if (!ok) ++counter.failed;
}

}  // namespace

bool CoverReport::all_pass() const {
    const CheckCounter* counters[] = {&diagonal_in_w0, &stasis,     &endpoints,      &containment,
                                      &continuity,     &separation, &offdiagonal_wj};
    for (const CheckCounter* c : counters) {
        if (c->failed != 0) return false;
    }
    return max_j_observed <= formula_bound && witness_attains;
}

Weights model_weights(const std::vector<GroupModel>& models) {
    Weights w;
    w.reserve(models.size());
    for (const auto& g : models) w.push_back(g.cat());
    return w;
}

int max_face_pair_weight_oracle(const SimplicialComplex& K, const Weights& w) {
    if (K.vertex_count() > 12) {
        throw ValidationError("exhaustive oracle is restricted to m <= 12");
    }
    if (static_cast<int>(w.size()) != K.vertex_count()) {
        throw ValidationError("weight vector length does not match vertex count");
    }
    const std::vector<Face> faces = K.enumerate_faces();
    int best = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i; j < faces.size(); ++j) {
            best = std::max(best, face_weight(faces[i] | faces[j], w));
        }
    }
    return best;
}

std::pair<Configuration, Configuration> attainment_witness(
    const SimplicialComplex& K, const std::vector<GroupModel>& models) {
    const Weights w = model_weights(models);
    const auto [s1, s2] = max_face_pair_witness(K, w);
    Configuration from = identity_configuration(models);
    Configuration to = identity_configuration(models);
    for (std::size_t i = 0; i < models.size(); ++i) {
        const Face bit = Face{1} << i;
        if (s1 & bit) from.elements[i] = models[i].antipode();
        // Antipodes shared by both faces would cancel in the relative
        // element; the second column keeps only the rows outside the first.
        if ((s2 & bit) && !(s1 & bit)) to.elements[i] = models[i].antipode();
    }
    return {std::move(from), std::move(to)};
}

bool verify_containment(const PlannedPath& path, Face sigma1, Face sigma2, int grid_size) {
    if (grid_size < 3 || grid_size % 2 == 0) {
        throw std::invalid_argument("containment grid must be odd and >= 3");
    }
    const auto& models = path.models();
    std::vector<GroupElement> identities;
    identities.reserve(models.size());
    for (const auto& g : models) identities.push_back(g.identity());

    for (int gi = 0; gi < grid_size; ++gi) {
        const double t = grid_t(gi, grid_size);
        for (std::size_t r = 0; r < models.size(); ++r) {
            const Face bit = Face{1} << r;
            const bool must_be_identity =
                (t <= 0.5 && !(sigma1 & bit)) || (t >= 0.5 && !(sigma2 & bit));
            if (must_be_identity && !(path.row_at(r, t) == identities[r])) return false;
        }
    }
    return true;
}

CoverReport verify_fh_cover(const SimplicialComplex& K, const std::vector<GroupModel>& models,
                            long trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    if (static_cast<int>(models.size()) != K.vertex_count()) {
        throw ValidationError("group assignment arity does not match the complex");
    }

    CoverReport report;
    report.seed = seed;
    report.trials = trials;
    const Weights w = model_weights(models);
    report.formula_bound = max_face_pair_weight(K, w);
    report.histogram.assign(static_cast<std::size_t>(report.formula_bound) + 1, 0);

    // Constructed attainment witness; random sampling almost surely stays in
    // the zero cell, so the top domain is exhibited deterministically.
    auto [wit_from, wit_to] = attainment_witness(K, models);
    report.witness_from = wit_from;
    report.witness_to = wit_to;
    report.witness_cell = domain_index(wit_from, wit_to, models, K);
    report.witness_j = report.witness_cell.total();
    report.witness_attains = (report.witness_j == report.formula_bound);
    report.max_j_observed = report.witness_j;
    if (report.witness_j >= 1) {
        record(report.offdiagonal_wj,
               configuration_distance(wit_from, wit_to, models) > 0.0);
    }

    const long sampled_cap = std::min(trials, kSampledCheckCap);

    // Random pair trials: histogram, endpoint exactness, containment.
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, 0, static_cast<std::uint64_t>(trial)));
        const Configuration from = sample_configuration(K, models, rng);
        const Configuration to = sample_configuration(K, models, rng);
        const PlannedPath path = plan(from, to, models, K);
        const int j = path.cell().total();
        report.max_j_observed = std::max(report.max_j_observed, j);
        if (j >= 0 && j <= report.formula_bound) {
            ++report.histogram[static_cast<std::size_t>(j)];
        }
        const bool start_exact = path.at(0.0) == from;
        const bool end_close =
            configuration_distance(path.at(1.0), to, models) <= kEndpointTol;
        record(report.endpoints, start_exact && end_close);
        if (j >= 1) {
            record(report.offdiagonal_wj, configuration_distance(from, to, models) > 0.0);
        }
        if (trial < sampled_cap) {
            record(report.containment,
                   verify_containment(path, support(from, models), support(to, models),
                                      kPathGrid));
        }
    }

    // Diagonal trials: classification and exact stasis.
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, 1, static_cast<std::uint64_t>(trial)));
        const Configuration x = sample_configuration(K, models, rng);
        const PlannedPath path = plan(x, x, models, K);
        record(report.diagonal_in_w0, path.cell().total() == 0);
        double sup_dev = 0.0;
        for (int gi = 0; gi < kPathGrid; ++gi) {
            sup_dev = std::max(
                sup_dev, configuration_distance(path.at(grid_t(gi, kPathGrid)), x, models));
        }
        record(report.stasis, sup_dev == 0.0);
    }

    const std::vector<RealizableCell> cells = enumerate_cells(K, models);

    // Continuity smoke: perturb a pair within its cell and compare paths.
    {
        int leaves = 0;
        for (const auto& g : models) leaves += leaf_factor_count(g);
        const double eps = kContinuityPairDist / (4.0 * std::max(1, leaves));
        for (long trial = 0; trial < sampled_cap; ++trial) {
            Rng rng(derive_seed(seed, 2, static_cast<std::uint64_t>(trial)));
            Configuration from, to;
            if (trial % 2 == 0 || cells.empty()) {
                from = sample_configuration(K, models, rng);
                to = sample_configuration(K, models, rng);
            } else {
                const auto& rc = cells[rng.uniform_int(cells.size())];
                auto pair = construct_cell_pair(rc, models, rng);
                from = std::move(pair.first);
                to = std::move(pair.second);
            }
            const PlannedPath base = plan(from, to, models, K);

            Configuration from2 = from;
            Configuration to2 = to;
            for (std::size_t i = 0; i < models.size(); ++i) {
                if (base.cell().rows[i] != 0) continue;  // keep positive-count rows frozen
                GroupElement f2 = from.elements[i];
                GroupElement t2 = to.elements[i];
                if (!(f2 == models[i].identity())) f2 = perturb_element(models[i], f2, eps, rng);
                if (!(t2 == models[i].identity())) t2 = perturb_element(models[i], t2, eps, rng);
                if (closed_condition_count(models[i], f2, t2) == 0) {
                    from2.elements[i] = f2;
                    to2.elements[i] = t2;
                }
            }
            const PlannedPath moved = plan(from2, to2, models, K);
            if (!(moved.cell() == base.cell())) {
                record(report.continuity, false);
                continue;
            }
            double sup_dev = 0.0;
            for (int gi = 0; gi < kPathGrid; ++gi) {
                const double t = grid_t(gi, kPathGrid);
                sup_dev = std::max(
                    sup_dev, configuration_distance(base.at(t), moved.at(t), models));
            }
            record(report.continuity, sup_dev <= kContinuityPathTol);
        }
    }

    // Closure separation: distinct cells with equal totals split on the
    // cover pair-set of a differing row.
    {
        std::map<int, std::vector<const RealizableCell*>> by_total;
        for (const auto& rc : cells) by_total[rc.cell.total()].push_back(&rc);
        std::vector<const std::vector<const RealizableCell*>*> eligible;
        for (const auto& [total, group] : by_total) {
            if (group.size() >= 2) eligible.push_back(&group);
        }
        if (!eligible.empty()) {
            for (long trial = 0; trial < sampled_cap; ++trial) {
                Rng rng(derive_seed(seed, 3, static_cast<std::uint64_t>(trial)));
                const auto& group = *eligible[rng.uniform_int(eligible.size())];
                const std::size_t ia = rng.uniform_int(group.size());
                std::size_t ib = rng.uniform_int(group.size() - 1);
                if (ib >= ia) ++ib;
                const RealizableCell& ca = *group[ia];
                const RealizableCell& cb = *group[ib];

                auto pair_a = construct_cell_pair(ca, models, rng);
                auto pair_b = construct_cell_pair(cb, models, rng);
                const CellLabel cell_a = domain_index(pair_a.first, pair_a.second, models, K);
                const CellLabel cell_b = domain_index(pair_b.first, pair_b.second, models, K);
                if (!(cell_a == ca.cell) || !(cell_b == cb.cell)) {
                    record(report.separation, false);
                    continue;
                }
                const auto [lo, hi] = separation_witness(cell_a, cell_b);
                auto rel = [&](const std::pair<Configuration, Configuration>& p, int row) {
                    const GroupModel& g = models[static_cast<std::size_t>(row)];
                    return relative_element(g, p.first.elements[static_cast<std::size_t>(row)],
                                            p.second.elements[static_cast<std::size_t>(row)]);
                };
                // Row `lo`: pair A sits in the cover set of its own count,
                // pair B does not (its count there is strictly larger).
                const GroupModel& glo = models[static_cast<std::size_t>(lo)];
                const GroupModel& ghi = models[static_cast<std::size_t>(hi)];
                const bool ok =
                    glo.in_cover_set(cell_a.rows[static_cast<std::size_t>(lo)], rel(pair_a, lo)) &&
                    !glo.in_cover_set(cell_a.rows[static_cast<std::size_t>(lo)], rel(pair_b, lo)) &&
                    ghi.in_cover_set(cell_b.rows[static_cast<std::size_t>(hi)], rel(pair_b, hi)) &&
                    !ghi.in_cover_set(cell_b.rows[static_cast<std::size_t>(hi)], rel(pair_a, hi));
                record(report.separation, ok);
            }
        }
    }

    return report;
}

}  // namespace polyplan
