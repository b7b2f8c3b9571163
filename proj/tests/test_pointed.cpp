// Pointed sets and pointed maps: the value-table arithmetic everything else
// sits on.  Laws are checked by brute force over small sizes.

#include "fincat/pointed_set.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fincat/skeletal.hpp"

using namespace fincat;

TEST_CASE("pointed map application and basepoint") {
    PointedMap f{3, 2, {2, 0, 1}};
    REQUIRE(f.well_formed());
    CHECK(f.apply(0) == 0);
    CHECK(f.apply(1) == 2);
    CHECK(f.apply(2) == 0);
    CHECK(f.apply(3) == 1);
    CHECK_THROWS_AS(f.apply(4), std::invalid_argument);
    CHECK_FALSE(f.is_zero());
    CHECK(zero_map(3, 2).is_zero());
    CHECK(zero_map(0, 5).is_zero());  // the unique map out of <0> factors through <0>
}

TEST_CASE("well-formedness rejects bad tables") {
    CHECK_FALSE(PointedMap{2, 2, {1}}.well_formed());      // table too short
    CHECK_FALSE(PointedMap{1, 2, {3}}.well_formed());      // value out of range
    CHECK_FALSE(PointedMap{1, 2, {-1}}.well_formed());     // negative value
    CHECK(PointedMap{0, 0, {}}.well_formed());             // the identity of <0>
}

TEST_CASE("composition is associative and unital on a brute-forced universe") {
    // Every map between <0>..<2> and every composable pair / triple.
    std::vector<PointedMap> all;
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            for (const auto& f : enum_pointed_maps(n, m, false)) all.push_back(f);

    for (const auto& f : all) {
        CHECK(compose(identity_map(f.cod), f) == f);
        CHECK(compose(f, identity_map(f.dom)) == f);
        CHECK(compose(zero_map(f.cod, 1), f).is_zero());
        CHECK(compose(f, zero_map(1, f.dom)).is_zero());
        for (const auto& g : all) {
            if (g.dom != f.cod) continue;
            for (const auto& h : all) {
                if (h.dom != g.cod) continue;
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
            }
        }
    }
}

TEST_CASE("bijectivity detection") {
    CHECK(identity_map(3).is_bijective());
    CHECK(PointedMap{2, 2, {2, 1}}.is_bijective());
    CHECK_FALSE(PointedMap{2, 2, {1, 1}}.is_bijective());
    CHECK_FALSE(PointedMap{2, 3, {1, 2}}.is_bijective());  // dom != cod
    CHECK_FALSE(zero_map(1, 1).is_bijective());
}

TEST_CASE("wedge sums glue at the basepoint") {
    Wedge w = wedge({{2}, {0}, {3}});
    CHECK(w.total.size == 5);
    REQUIRE(w.inclusions.size() == 3);
    CHECK(w.inclusions[0].values == std::vector<int>{1, 2});
    CHECK(w.inclusions[1].values.empty());
    CHECK(w.inclusions[2].values == std::vector<int>{3, 4, 5});
    // inclusions are jointly surjective off the basepoint and pairwise disjoint
    std::vector<int> hit(w.total.size + 1, 0);
    for (const auto& inc : w.inclusions)
        for (int v : inc.values) ++hit[v];
    for (int k = 1; k <= w.total.size; ++k) CHECK(hit[k] == 1);
}
