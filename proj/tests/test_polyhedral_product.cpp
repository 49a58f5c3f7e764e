#include <doctest.h>

#include <map>

#include "polyplan/polyhedral_product.hpp"
#include "polyplan/rng.hpp"

using namespace polyplan;

namespace {

std::vector<GroupModel> two_circles() { return {GroupModel::circle(), GroupModel::circle()}; }

}  // namespace

TEST_CASE("support compares exactly against the identity") {
    const auto models = two_circles();
    Configuration cfg = identity_configuration(models);
    CHECK(support(cfg, models) == Face{0});

    cfg.elements[0] = models[0].antipode();
    CHECK(support(cfg, models) == Face{0b01});

    cfg.elements[1] = models[1].antipode();
    CHECK(support(cfg, models) == Face{0b11});

    // a negated-zero imaginary part still counts as the identity
    cfg.elements[0] = GroupElement{{1.0, -0.0}};
    CHECK((support(cfg, models) & Face{0b01}) == 0);
}

TEST_CASE("membership is support being a face") {
    const auto K = SimplicialComplex::validate({2, {{1}, {2}}});
    const auto models = two_circles();

    Configuration cfg = identity_configuration(models);
    CHECK(is_member(cfg, K, models));

    cfg.elements[0] = models[0].antipode();
    CHECK(is_member(cfg, K, models));

    cfg.elements[1] = models[1].antipode();
    CHECK(!is_member(cfg, K, models));

    Configuration wrong_arity;
    wrong_arity.elements.push_back(models[0].identity());
    CHECK_THROWS_AS(is_member(wrong_arity, K, models), ValidationError);
}

TEST_CASE("validate_configuration enforces the declared face") {
    const auto K = SimplicialComplex::validate({2, {{1}, {2}}});
    const auto models = two_circles();

    Configuration cfg = identity_configuration(models);
    cfg.elements[0] = models[0].antipode();
    cfg.declared_face = Face{0b01};
    CHECK_NOTHROW(validate_configuration(cfg, K, models));

    cfg.declared_face = Face{0b10};  // support {1} not inside {2}
    CHECK_THROWS_AS(validate_configuration(cfg, K, models), ValidationError);

    cfg.declared_face = Face{0b11};  // {1,2} is not a face of the wedge
    CHECK_THROWS_AS(validate_configuration(cfg, K, models), ValidationError);
}

TEST_CASE("samples are members with support inside the chosen face") {
    const auto K = SimplicialComplex::validate({3, {{1, 2}, {3}}});
    const std::vector<GroupModel> models{GroupModel::circle(), GroupModel::circle(),
                                         GroupModel::sphere3()};
    Rng rng(31);
    for (int it = 0; it < 10000; ++it) {
        const Configuration cfg = sample_configuration(K, models, rng);
        CHECK(is_member(cfg, K, models));
        REQUIRE(cfg.declared_face.has_value());
        CHECK((support(cfg, models) & ~*cfg.declared_face) == 0);
    }
}

TEST_CASE("face choice is uniform over maximal faces") {
    const auto K = SimplicialComplex::validate({2, {{1}, {2}}});
    const auto models = two_circles();
    Rng rng(32);
    std::map<Face, int> counts;
    const int trials = 10000;
    for (int it = 0; it < trials; ++it) {
        const Configuration cfg = sample_configuration(K, models, rng);
        ++counts[*cfg.declared_face];
    }
    CHECK(counts.size() == 2);
    for (const auto& [face, n] : counts) {
        CHECK(n > trials * 0.45);
        CHECK(n < trials * 0.55);
    }
}

TEST_CASE("sampling is deterministic per seed") {
    const auto K = SimplicialComplex::validate({2, {{1}, {2}}});
    const auto models = two_circles();
    Rng rng1(33), rng2(33);
    for (int it = 0; it < 100; ++it) {
        CHECK(sample_configuration(K, models, rng1) == sample_configuration(K, models, rng2));
    }
}

TEST_CASE("single-vertex complex forces support into that vertex") {
    const auto K = SimplicialComplex::validate({1, {{1}}});
    const std::vector<GroupModel> models{GroupModel::circle()};
    Rng rng(34);
    for (int it = 0; it < 100; ++it) {
        const Configuration cfg = sample_configuration(K, models, rng);
        CHECK((support(cfg, models) & ~Face{0b1}) == 0);
    }
}

TEST_CASE("empty complex samples the basepoint") {
    const auto K = SimplicialComplex::validate({2, {}});
    const auto models = two_circles();
    Rng rng(35);
    const Configuration cfg = sample_configuration(K, models, rng);
    CHECK(cfg == identity_configuration(models));
}
