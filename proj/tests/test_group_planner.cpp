#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyplan/group_planner.hpp"
#include "polyplan/rng.hpp"

using namespace polyplan;

namespace {

constexpr double kPi = std::numbers::pi;

GroupElement circle_point(double theta) {
    return GroupElement{{std::cos(theta), std::sin(theta)}};
}

}  // namespace

TEST_CASE("closed_condition_count is zero on the diagonal") {
    for (const auto& g : {GroupModel::circle(), GroupModel::sphere3(),
                          GroupModel::product({GroupModel::circle(), GroupModel::circle()})}) {
        Rng rng(21);
        for (int it = 0; it < 10000; ++it) {
            const GroupElement a = g.sample(rng);
            CHECK(closed_condition_count(g, a, a) == 0);
        }
    }
}

TEST_CASE("closed_condition_count frozen examples") {
    const auto c = GroupModel::circle();
    const GroupElement one = c.identity();
    const GroupElement minus_one = c.antipode();
    const GroupElement i_pt{{0.0, 1.0}};
    CHECK(closed_condition_count(c, minus_one, one) == 1);
    CHECK(closed_condition_count(c, i_pt, one) == 0);
    CHECK(closed_condition_count(c, one, minus_one) == 1);

    const auto s = GroupModel::sphere3();
    CHECK(closed_condition_count(s, s.antipode(), s.identity()) == 1);

    const auto torus = GroupModel::product({GroupModel::circle(), GroupModel::circle()});
    CHECK(closed_condition_count(torus, torus.antipode(), torus.identity()) == 2);
    CHECK(closed_condition_count(torus, torus.join({c.antipode(), c.identity()}),
                                 torus.identity()) == 1);
}

TEST_CASE("reserved_section is the constant path on the diagonal") {
    for (const auto& g : {GroupModel::circle(), GroupModel::sphere3()}) {
        Rng rng(22);
        for (int it = 0; it < 500; ++it) {
            const GroupElement a = g.sample(rng);
            const GroupPath path = reserved_section(g, 0, a, a);
            for (int i = 0; i <= 16; ++i) {
                CHECK(g.distance(path.at(i / 16.0), a) == 0.0);
            }
        }
    }
}

TEST_CASE("reserved_section circle k=1 from -1 to 1 passes -1 and -i") {
    const auto g = GroupModel::circle();
    const GroupPath path = reserved_section(g, 1, g.antipode(), g.identity());
    CHECK(path.at(0.0) == g.antipode());
    CHECK(g.distance(path.at(0.5), g.antipode()) <= 1e-12);
    CHECK(g.distance(path.at(0.75), circle_point(-kPi / 2)) <= 1e-12);
    CHECK(g.distance(path.at(1.0), g.identity()) <= 1e-9);
}

TEST_CASE("reserved_section circle k=0 follows the geodesic") {
    const auto g = GroupModel::circle();
    const GroupElement i_pt{{0.0, 1.0}};
    const GroupPath path = reserved_section(g, 0, i_pt, g.identity());
    CHECK(g.distance(path.at(0.5), circle_point(kPi / 4)) <= 1e-12);
}

TEST_CASE("reserved_section endpoints over random pairs") {
    for (const auto& g : {GroupModel::circle(), GroupModel::sphere3(),
                          GroupModel::product({GroupModel::circle(), GroupModel::sphere3()})}) {
        Rng rng(23);
        for (int it = 0; it < 10000; ++it) {
            const GroupElement a = g.sample(rng);
            const GroupElement b = g.sample(rng);
            const int k = closed_condition_count(g, a, b);
            const GroupPath path = reserved_section(g, k, a, b);
            CHECK(path.at(0.0) == a);  // exact
            CHECK(g.distance(path.at(1.0), b) <= 1e-6);
        }
    }
}

TEST_CASE("reserved_section rejects pairs outside the requested domain") {
    const auto g = GroupModel::circle();
    CHECK_THROWS(reserved_section(g, 1, g.identity(), g.identity()));
    CHECK_THROWS(reserved_section(g, 0, g.antipode(), g.identity()));
}

TEST_CASE("windowed_section degenerate branch holds at the start") {
    const auto g = GroupModel::circle();
    const GroupPath path = windowed_section(g, 0, g.identity(), g.identity());
    for (int i = 0; i <= 16; ++i) CHECK(path.at(i / 16.0) == g.identity());
}

TEST_CASE("windowed_section circle k=1 frozen schedule") {
    const auto g = GroupModel::circle();
    // d1 = pi, d2 = 0: window is [0, 1/2); value at 1/4 is the section value
    // at parameter 1/2, which is -1.
    const GroupPath path = windowed_section(g, 1, g.antipode(), g.identity());
    CHECK(g.distance(path.at(0.25), g.antipode()) <= 1e-12);
    for (int i = 0; i <= 16; ++i) {
        const double t = 0.5 + 0.5 * i / 16.0;
        CHECK(path.at(t) == g.identity());  // hold branch, bit-exact
    }
}

TEST_CASE("windowed_section reaches the target exactly at t=1") {
    for (const auto& g : {GroupModel::circle(), GroupModel::sphere3()}) {
        Rng rng(24);
        for (int it = 0; it < 2000; ++it) {
            const GroupElement a = g.sample(rng);
            const GroupElement b = g.sample(rng);
            const int k = closed_condition_count(g, a, b);
            const GroupPath path = windowed_section(g, k, a, b);
            CHECK(path.at(0.0) == a);
            CHECK(path.at(1.0) == b);
        }
    }
}

TEST_CASE("windowed_section in-cell continuity smoke test") {
    const auto g = GroupModel::circle();
    Rng rng(25);
    for (int it = 0; it < 1000; ++it) {
        const GroupElement a = g.sample(rng);
        const GroupElement b = g.sample(rng);
        if (closed_condition_count(g, a, b) != 0) continue;
        const double eps = 2.5e-7;
        const GroupElement a2 = g.multiply(a, circle_point(eps * rng.uniform(-1.0, 1.0)));
        const GroupElement b2 = g.multiply(b, circle_point(eps * rng.uniform(-1.0, 1.0)));
        if (closed_condition_count(g, a2, b2) != 0) continue;
        const double pair_dist = g.distance(a, a2) + g.distance(b, b2);
        REQUIRE(pair_dist <= 1e-6);
        const GroupPath p1 = windowed_section(g, 0, a, b);
        const GroupPath p2 = windowed_section(g, 0, a2, b2);
        double sup = 0.0;
        for (int i = 0; i < 129; ++i) {
            const double t = i / 128.0;
            sup = std::max(sup, g.distance(p1.at(t), p2.at(t)));
        }
        CHECK(sup <= 1e-3);
    }
}
