#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "polyplan/errors.hpp"
#include "polyplan/group_model.hpp"
#include "polyplan/rng.hpp"

using namespace polyplan;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSamples = 10000;

std::vector<GroupModel> all_models() {
    return {GroupModel::circle(), GroupModel::sphere3(),
            GroupModel::product({GroupModel::circle(), GroupModel::circle()}),
            GroupModel::product({GroupModel::circle(), GroupModel::sphere3()})};
}

GroupElement circle_point(double theta) {
    return GroupElement{{std::cos(theta), std::sin(theta)}};
}

}  // namespace

TEST_CASE("leaf models expose the declared constants") {
    const auto c = GroupModel::circle();
    CHECK(c.cat() == 1);
    CHECK(c.diameter() == doctest::Approx(kPi));
    CHECK(c.coord_count() == 2);

    const auto s = GroupModel::sphere3();
    CHECK(s.cat() == 1);
    CHECK(s.diameter() == doctest::Approx(kPi));
    CHECK(s.coord_count() == 4);
}

TEST_CASE("product model sums category, diameter and coordinates") {
    const auto torus = GroupModel::product({GroupModel::circle(), GroupModel::circle()});
    CHECK(torus.cat() == 2);
    CHECK(torus.cover_sets() == 3);
    CHECK(torus.diameter() == doctest::Approx(2 * kPi));
    CHECK(torus.coord_count() == 4);
    CHECK_THROWS_AS(GroupModel::product({}), ValidationError);
}

TEST_CASE("group axioms hold numerically on sampled triples") {
    for (const auto& g : all_models()) {
        Rng rng(7);
        const GroupElement e = g.identity();
        for (int it = 0; it < kSamples; ++it) {
            const GroupElement a = g.sample(rng);
            const GroupElement b = g.sample(rng);
            const GroupElement c = g.sample(rng);
            CHECK(g.distance(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c))) <=
                  1e-9);
            CHECK(g.distance(g.multiply(a, e), a) <= 1e-9);
            CHECK(g.distance(g.multiply(e, a), a) <= 1e-9);
            CHECK(g.distance(g.multiply(a, g.inverse(a)), e) <= 1e-9);
        }
    }
}

TEST_CASE("multiplying by the stored identity is bit-exact") {
    for (const auto& g : all_models()) {
        Rng rng(8);
        const GroupElement e = g.identity();
        for (int it = 0; it < 1000; ++it) {
            const GroupElement a = g.sample(rng);
            CHECK(g.multiply(a, e) == a);
            CHECK(g.multiply(e, a) == a);
        }
    }
}

TEST_CASE("metric is symmetric, bounded, zero on the diagonal, left-invariant") {
    for (const auto& g : all_models()) {
        Rng rng(9);
        for (int it = 0; it < kSamples; ++it) {
            const GroupElement a = g.sample(rng);
            const GroupElement b = g.sample(rng);
            const GroupElement c = g.sample(rng);
            const double d = g.distance(a, b);
            CHECK(d >= 0.0);
            CHECK(d <= g.diameter() + 1e-12);
            CHECK(std::fabs(d - g.distance(b, a)) <= 1e-9);
            CHECK(g.distance(a, a) == 0.0);
            CHECK(std::fabs(g.distance(g.multiply(c, a), g.multiply(c, b)) - d) <= 1e-9);
        }
    }
}

TEST_CASE("identity and antipode sit in the expected cover sets") {
    for (const auto& g : all_models()) {
        const GroupElement e = g.identity();
        const GroupElement anti = g.antipode();
        CHECK(g.in_cover_set(0, e));
        for (int k = 1; k <= g.cat(); ++k) CHECK(!g.in_cover_set(k, e));
        CHECK(g.least_cover_index(e) == 0);
        CHECK(g.least_cover_index(anti) == g.cat());
        CHECK(g.distance(e, anti) == doctest::Approx(g.diameter()));
    }
}

TEST_CASE("cover sets jointly cover on samples") {
    for (const auto& g : all_models()) {
        Rng rng(10);
        for (int it = 0; it < kSamples; ++it) {
            const int k = g.least_cover_index(g.sample(rng));
            CHECK(k >= 0);
            CHECK(k <= g.cat());
        }
    }
}

TEST_CASE("contractions run from the element to the identity") {
    for (const auto& g : all_models()) {
        Rng rng(11);
        const GroupElement e = g.identity();
        for (int it = 0; it < kSamples; ++it) {
            const GroupElement a = g.sample(rng);
            const int k = g.least_cover_index(a);
            CHECK(g.distance(g.contract(k, a, 0.0), a) <= 1e-9);
            CHECK(g.distance(g.contract(k, a, 1.0), e) <= 1e-6);
        }
    }
    // the k = 1 rule on generic points of the punctured leaf groups
    for (const auto& g : {GroupModel::circle(), GroupModel::sphere3()}) {
        Rng rng(14);
        const GroupElement e = g.identity();
        for (int it = 0; it < kSamples; ++it) {
            const GroupElement a = g.sample(rng);
            if (!g.in_cover_set(1, a)) continue;
            CHECK(g.distance(g.contract(1, a, 0.0), a) <= 1e-9);
            CHECK(g.distance(g.contract(1, a, 1.0), e) <= 1e-6);
        }
    }
}

TEST_CASE("the zero contraction fixes the identity bit-exactly") {
    for (const auto& g : all_models()) {
        const GroupElement e = g.identity();
        for (int i = 0; i <= 16; ++i) {
            const double t = i / 16.0;
            CHECK(g.contract(0, e, t) == e);
        }
    }
}

TEST_CASE("circle contraction H_0 follows the shortest arc") {
    const auto g = GroupModel::circle();
    const GroupElement mid = g.contract(0, circle_point(kPi / 2), 0.5);
    CHECK(g.distance(mid, circle_point(kPi / 4)) <= 1e-12);

    // H_0 fixes 1 for every t
    for (int i = 0; i <= 8; ++i) {
        CHECK(g.contract(0, g.identity(), i / 8.0) == g.identity());
    }
}

TEST_CASE("circle contraction H_1 passes through the lower semicircle") {
    const auto g = GroupModel::circle();
    const GroupElement minus_one = g.antipode();
    CHECK(g.distance(g.contract(1, minus_one, 0.5), minus_one) <= 1e-12);
    CHECK(g.distance(g.contract(1, minus_one, 0.75), circle_point(-kPi / 2)) <= 1e-12);
    CHECK(g.distance(g.contract(1, minus_one, 1.0), g.identity()) <= 1e-9);

    // points on either side of 1 contract to -1 without crossing 1
    Rng rng(12);
    for (int it = 0; it < 2000; ++it) {
        const GroupElement a = g.sample(rng);
        if (!g.in_cover_set(1, a)) continue;
        for (int i = 0; i <= 32; ++i) {
            const GroupElement v = g.contract(1, a, i / 32.0 * 0.5);
            CHECK(g.distance(v, g.identity()) > 0.0);
        }
    }
}

TEST_CASE("sphere3 contraction H_0 follows the great circle") {
    const auto g = GroupModel::sphere3();
    const GroupElement j{{0.0, 0.0, 1.0, 0.0}};
    const GroupElement mid = g.contract(0, j, 0.5);
    const double r = std::sqrt(0.5);
    const GroupElement expected{{r, 0.0, r, 0.0}};
    CHECK(g.distance(mid, expected) <= 1e-12);
}

TEST_CASE("sphere3 membership of the poles") {
    const auto g = GroupModel::sphere3();
    CHECK(g.in_cover_set(1, g.antipode()));
    CHECK(!g.in_cover_set(0, g.antipode()));
    CHECK(g.in_cover_set(0, g.identity()));
    CHECK(!g.in_cover_set(1, g.identity()));
}

TEST_CASE("product cover counts add up per factor") {
    const auto torus = GroupModel::product({GroupModel::circle(), GroupModel::circle()});
    const auto c = GroupModel::circle();
    const GroupElement one_one = torus.identity();
    CHECK(torus.least_cover_index(one_one) == 0);
    CHECK(torus.least_cover_index(torus.antipode()) == 2);
    const GroupElement mixed = torus.join({c.antipode(), c.identity()});
    CHECK(torus.least_cover_index(mixed) == 1);

    // membership in exactly one product cover set
    Rng rng(13);
    for (int it = 0; it < 2000; ++it) {
        const GroupElement a = torus.sample(rng);
        int hits = 0;
        for (int k = 0; k <= torus.cat(); ++k) hits += torus.in_cover_set(k, a) ? 1 : 0;
        CHECK(hits == 1);
    }
}

TEST_CASE("normalized validates arity and norm") {
    const auto g = GroupModel::circle();
    CHECK_THROWS_AS(g.normalized({1.0}), ValidationError);
    CHECK_THROWS_AS(g.normalized({0.0, 0.0}), ValidationError);
    CHECK(g.normalized({1.0, 0.0}) == g.identity());
    CHECK(g.normalized({2.0, 0.0}) == g.identity());
    const auto q = GroupModel::sphere3().normalized({3.0, 0.0, 0.0, 0.0});
    CHECK(q == GroupModel::sphere3().identity());
}

TEST_CASE("contract rejects elements outside the requested cover set") {
    const auto g = GroupModel::circle();
    CHECK_THROWS(g.contract(0, g.antipode(), 0.5));
    CHECK_THROWS(g.contract(1, g.identity(), 0.5));
    CHECK_THROWS(g.contract(2, g.identity(), 0.5));
}
