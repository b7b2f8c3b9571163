// Tuple categories over a pointed base: enumeration, the materialized tables,
// the length-one inclusion, and the smash collapse.  Counting oracles are
// computed by hand from the injection/component structure.

#include "fincat/tuple_category.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fincat/universe.hpp"

using namespace fincat;

TEST_CASE("tuple hom enumeration and the closed count agree") {
    SkelCat s = make_skel_cat(3);
    TupleBase base = skel_base(s);

    // [DERIVED] nonzero (2)->(3) are exactly the 15 nonzero pointed maps <2> -> <3>
    auto one = enum_tuple_hom(base, ObjectTuple{false, {2}}, ObjectTuple{false, {3}}, true);
    CHECK(one.size() == 15);

    // [DERIVED] nonzero (1,2)->(2,2): two injections, each contributing 2*8
    ObjectTuple src{false, {1, 2}}, dst{false, {2, 2}};
    auto pair = enum_tuple_hom(base, src, dst, true);
    CHECK(pair.size() == 32);
    CHECK(tuple_hom_count(base, src, dst) == 32);
    for (const auto& a : pair) CHECK(arrow_well_formed(base, a));

    // with the zero arrow appended
    CHECK(enum_tuple_hom(base, src, dst, false).size() == 33);

    // no injections 2 -> 1: the only morphism (1,1) -> (1) is zero
    auto down = enum_tuple_hom(base, ObjectTuple{false, {1, 1}}, ObjectTuple{false, {1}});
    REQUIRE(down.size() == 1);
    CHECK(down[0].zero);
    CHECK(tuple_hom_count(base, ObjectTuple{false, {1, 1}}, ObjectTuple{false, {1}}) == 0);

    // basepoint absorbs
    CHECK(enum_tuple_hom(base, basepoint_tuple(), dst, true).empty());
    CHECK(enum_tuple_hom(base, src, basepoint_tuple(), true).empty());
}

TEST_CASE("canonical object order of a truncation") {
    SkelCat s = make_skel_cat(2);
    auto tuples = enum_truncated_tuples(skel_base(s), 2);
    REQUIRE(tuples.size() == 8);
    CHECK(tuples[0].is_basepoint);
    CHECK(tuples[1].entries.empty());  // the unit ()
    CHECK(tuples[2].entries == std::vector<int>{1});
    CHECK(tuples[3].entries == std::vector<int>{2});
    CHECK(tuples[4].entries == std::vector<int>{1, 1});
    CHECK(tuples[5].entries == std::vector<int>{1, 2});
    CHECK(tuples[6].entries == std::vector<int>{2, 1});
    CHECK(tuples[7].entries == std::vector<int>{2, 2});
}

TEST_CASE("materialized tuple category over the N=2 base, lengths <= 2") {
    SkelCat s = make_skel_cat(2);
    TupleCat t = make_tuple_cat(skel_base(s), 2);
    // [DERIVED] 8 objects, 64 zero morphisms, 503 nonzero
    CHECK(t.cat.num_objects() == 8);
    CHECK(t.cat.num_morphisms() == 567);
    long long zeros = 0, nonzero = 0;
    for (int m = 0; m < t.cat.num_morphisms(); ++m)
        (t.cat.is_zero_mor(m) ? zeros : nonzero)++;
    CHECK(zeros == 64);
    CHECK(nonzero == 503);

    auto r = validate_category(t.cat);
    INFO(r.summary());
    CHECK(r.ok);

    // per-pair table sizes match the closed count
    for (int a = 0; a < t.cat.num_objects(); ++a)
        for (int c = 0; c < t.cat.num_objects(); ++c)
            CHECK(static_cast<long long>(t.cat.nonzero_hom(a, c).size()) ==
                  tuple_hom_count(t.base, t.tuples[a], t.tuples[c]));

    // the census is the same table with names attached
    long long census_total = 0;
    for (const auto& row : hom_census(t)) census_total += row.nonzero;
    CHECK(census_total == 503);

    // object_id / arrow_id invert the tables
    for (int x = 0; x < t.cat.num_objects(); ++x) CHECK(t.object_id(t.tuples[x]) == x);
    for (int m = 0; m < t.cat.num_morphisms(); ++m) CHECK(t.arrow_id(t.arrows[m]) == m);
}

TEST_CASE("composition of tuple arrows matches the smash collapse") {
    SkelCat s = make_skel_cat(2);
    TupleCat t = make_tuple_cat(skel_base(s), 2);
    SkelCat wide = make_skel_cat(4);  // big enough for products of entries
    Functor col = collapse_functor(t, s, wide);
    REQUIRE(validate_functor(col).ok);
    // functoriality of the collapse is a strong joint test of compose_tuple
    // and smash_maps; spot-check the swap arrow's image
    TupleArrow swp{false, ObjectTuple{false, {2, 2}}, ObjectTuple{false, {2, 2}},
                   Injection{2, 2, {2, 1}},
                   {s.id_of(identity_map(2)), s.id_of(identity_map(2))}};
    PointedMap m = wide.maps[col.on_mor[t.arrow_id(swp)]];
    CHECK(m.values == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("length-one inclusion is fully faithful") {
    SkelCat s = make_skel_cat(2);
    TupleCat t = make_tuple_cat(skel_base(s), 2);
    Functor i = length_one_inclusion(t);
    CHECK(validate_functor(i).ok);
    CHECK(fully_faithful(i));
    CHECK(i.on_obj[0] == 0);  // basepoint to basepoint
}

TEST_CASE("tuple truncations include into wider-base truncations") {
    SkelCat s1 = make_skel_cat(1), s2 = make_skel_cat(2);
    TupleCat t1 = make_tuple_cat(skel_base(s1), 2);
    TupleCat t2 = make_tuple_cat(skel_base(s2), 2);
    Functor i = tuple_cat_inclusion(t1, t2, skel_inclusion(s1, s2));
    CHECK(validate_functor(i).ok);
    CHECK(fully_faithful(i));
}

TEST_CASE("concatenation is monoidal with unit () and absorbing basepoint") {
    ObjectTuple a{false, {1}}, b{false, {2}}, unit{false, {}};
    CHECK(oplus(a, b, 2).entries == std::vector<int>{1, 2});
    CHECK(oplus(a, unit, 2) == a);
    CHECK(oplus(unit, b, 2) == b);
    CHECK(oplus(a, basepoint_tuple(), 2).is_basepoint);
    CHECK_THROWS_AS(oplus(ObjectTuple{false, {1, 1}}, b, 2), TruncationError);

    TupleArrow u{false, a, b, Injection{1, 1, {1}}, {3}};
    TupleArrow z = zero_arrow(b, a);
    CHECK(oplus_arrow(u, z, 2).zero);
    TupleArrow uu = oplus_arrow(u, u, 2);
    CHECK(uu.inj.images == std::vector<int>{1, 2});
    CHECK(uu.psis == std::vector<int>{3, 3});
}

TEST_CASE("simplicial-base truncation materializes at small degree") {
    DeltaOpCat d = make_delta_op(1);
    TupleCat e = make_tuple_cat(delta_base(d), 2);
    // [DERIVED] frozen size of the degree-1, length-2 truncation
    CHECK(e.cat.num_morphisms() == 204);
    auto r = validate_category(e.cat);
    INFO(r.summary());
    CHECK(r.ok);
}

TEST_CASE("the universe refuses instances over the dense-table cap") {
    IndexUniverse u;
    CHECK_THROWS_AS(u.gstar(3, 2), TruncationError);
    CHECK_THROWS_AS(u.skel(40), TruncationError);
    // and serves cached references otherwise
    const TupleCat& g = u.gstar(2, 2);
    CHECK(&u.gstar(2, 2) == &g);
    CHECK(&u.resolve_ref("gstar:2,2") == &g.cat);
}
