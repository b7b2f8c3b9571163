// Serialization round trips and canonical output.  Dumps must be byte-stable
// for a fixed configuration, and malformed inputs must be rejected with
// invalid_argument (the CLI maps that to exit code 2).

#include "fincat/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fincat/suite.hpp"

using namespace fincat;
using nlohmann::json;

TEST_CASE("pointed maps and injections round-trip") {
    PointedMap f{3, 2, {2, 0, 1}};
    CHECK(pointed_map_from_json(pointed_map_json(f)) == f);
    CHECK_THROWS_AS(pointed_map_from_json(json{{"dom", 2}, {"cod", 1}, {"values", {5, 0}}}),
                    std::invalid_argument);
    Injection i{2, 3, {3, 1}};
    CHECK(injection_from_json(injection_json(i)) == i);
    CHECK_THROWS_AS(injection_from_json(json{{"q", 2}, {"p", 3}, {"images", {1, 1}}}),
                    std::invalid_argument);
}

TEST_CASE("tuples and tuple arrows round-trip") {
    CHECK(tuple_from_json(tuple_json(basepoint_tuple())).is_basepoint);
    ObjectTuple t{false, {1, 2}};
    CHECK(tuple_from_json(tuple_json(t)) == t);

    SkelCat s = make_skel_cat(2);
    auto homs = enum_tuple_hom(skel_base(s), ObjectTuple{false, {1, 2}},
                               ObjectTuple{false, {2, 2}}, false);
    for (const auto& a : homs) {
        TupleArrow back = tuple_arrow_from_json(tuple_arrow_json(a, s), s);
        CHECK(back.zero == a.zero);
        CHECK(back.src == a.src);
        CHECK(back.dst == a.dst);
        if (!a.zero) {
            CHECK(back.inj == a.inj);
            CHECK(back.psis == a.psis);
        }
    }
    // an arrow with a zero component map is rejected
    json bad = tuple_arrow_json(homs.front(), s);
    if (!bad.contains("zero")) {
        bad["psis"][0] = pointed_map_json(zero_map(1, 2));
        CHECK_THROWS_AS(tuple_arrow_from_json(bad, s), std::invalid_argument);
    }
}

TEST_CASE("categories round-trip through name tables") {
    for (const FinCategory& c : {walking_iso(), chain_category(2)}) {
        FinCategory back = category_from_json(category_json(c));
        CHECK(back.objects == c.objects);
        CHECK(back.mor_names == c.mor_names);
        CHECK(back.identities == c.identities);
        CHECK(back.compose_table == c.compose_table);
        CHECK(validate_category(back).ok);
    }
    SkelCat s = make_skel_cat(1);
    FinCategory back = category_from_json(category_json(s.cat));
    CHECK(back.basepoint == s.cat.basepoint);
    CHECK(back.zero_mor == s.cat.zero_mor);

    json dup = category_json(walking_iso());
    dup["objects"].push_back("x0");
    CHECK_THROWS_AS(category_from_json(dup), std::invalid_argument);
}

TEST_CASE("set diagrams round-trip against a universe reference") {
    IndexUniverse u;
    const SkelCat& s = u.skel(2);
    SetDiagram X = representable_diagram(s.cat, 1);
    json j = set_diagram_json(X, "fskel:2");
    SetDiagram back = set_diagram_from_json(j, u);
    CHECK(back.index == &s.cat);
    CHECK(back.levels == X.levels);
    for (size_t m = 0; m < X.action.size(); ++m) CHECK(back.action[m] == X.action[m]);

    // corrupting one action value breaks well-formedness
    json bad = j;
    bad["on_morphisms"]["<1>-><2>[1]"] = json::array({7});
    CHECK_THROWS_AS(set_diagram_from_json(bad, u), std::invalid_argument);

    json missing = j;
    missing["on_objects"].erase("<1>");
    CHECK_THROWS_AS(set_diagram_from_json(missing, u), std::invalid_argument);
}

TEST_CASE("inline index categories are adopted by the universe") {
    IndexUniverse u;
    SkelCat s1 = make_skel_cat(1);
    SetDiagram X = representable_diagram(s1.cat, 1);
    json j{{"index", category_json(s1.cat)},
           {"kind", "set"},
           {"on_objects", {{"<0>", 0}, {"<1>", 1}}},
           {"on_morphisms", json::object()}};
    for (int m = 0; m < s1.cat.num_morphisms(); ++m)
        j["on_morphisms"][s1.cat.mor_names[m]] = X.action[m].values;
    SetDiagram back = set_diagram_from_json(j, u);
    CHECK(back.levels == X.levels);
    CHECK(validate_set_diagram(back).ok);
}

TEST_CASE("cat diagrams round-trip") {
    IndexUniverse u;
    const SkelCat& s = u.skel(1);
    CatDiagram X;
    X.index = &s.cat;
    X.values.push_back(terminal_category());
    X.values.push_back(walking_arrow());
    for (int m = 0; m < s.cat.num_morphisms(); ++m) {
        int a = s.cat.mor_src[m], b = s.cat.mor_dst[m];
        if (a == 1 && b == 1 && !s.cat.is_zero_mor(m)) {
            X.action.push_back(identity_table(X.values[1]));
        } else {
            FunctorTable t;
            t.on_obj.assign(X.values[a].num_objects(), 0);
            t.on_mor.assign(X.values[a].num_morphisms(), b == 1 ? X.values[1].identities[0] : 0);
            X.action.push_back(std::move(t));
        }
    }
    REQUIRE(validate_cat_diagram(X).ok);
    json j = cat_diagram_json(X, "fskel:1");
    CatDiagram back = cat_diagram_from_json(j, u);
    CHECK(back.values[1].mor_names == X.values[1].mor_names);
    for (size_t m = 0; m < X.action.size(); ++m) CHECK(back.action[m] == X.action[m]);
    CHECK(validate_cat_diagram(back).ok);
}

TEST_CASE("lift serialization names every class by its least generator") {
    IndexUniverse u;
    const SkelCat& s = u.skel(2);
    const TupleCat& g = u.gstar(2, 2);
    SetDiagram X = representable_diagram(s.cat, 1);
    Lift L = lift_diagram(X, length_one_inclusion(g));
    json j = lift_json(L);
    REQUIRE(j.size() == static_cast<size_t>(g.cat.num_objects()));
    std::vector<int> sizes;
    for (const auto& lvl : j) {
        sizes.push_back(lvl.at("size").get<int>());
        CHECK(lvl.at("classes").size() == lvl.at("size").get<size_t>());
    }
    CHECK(sizes == std::vector<int>{0, 0, 1, 2, 2, 4, 4, 8});
}

TEST_CASE("census output shapes") {
    IndexUniverse u;
    const TupleCat& g = u.gstar(2, 2);
    json j = census_json(g);
    CHECK(j.at("total") == 567);
    CHECK(j.at("total_nonzero") == 503);
    CHECK(j.at("objects") == 8);
    CHECK(j.at("pairs").size() == 64);
    std::string csv = census_csv(g);
    CHECK(csv.rfind("src,dst,nonzero\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);  // header + 8*8 rows
}

TEST_CASE("check reports serialize deterministically") {
    SuiteConfig cfg;
    cfg.random_count = 5;
    CheckReport a = run_suite(cfg, {"axioms"});
    CheckReport b = run_suite(cfg, {"axioms"});
    CHECK(report_json(a).dump() == report_json(b).dump());
    json j = report_json(a);
    CHECK(j.at("config").at("trunc") == cfg.trunc_n);
    CHECK(j.at("summary").at("failed") == 0);
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
    }
}

TEST_CASE("dot output is well-formed for pointed categories") {
    std::string dot = dot_of_category(make_skel_cat(1).cat, "fskel1");
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);  // basepoint styling
    CHECK(dot.find("style=dashed") != std::string::npos);  // zero morphisms
    CHECK(dot.back() == '\n');
}

TEST_CASE("universe references reject unknown schemes") {
    IndexUniverse u;
    CHECK_THROWS_AS(u.resolve_ref("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(u.resolve_ref("fskel"), std::invalid_argument);
}
