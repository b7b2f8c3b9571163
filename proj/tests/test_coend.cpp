// The coend-style lift and its adjunction with restriction: representables
// map to representables, the unit is an iso, both triangle identities hold
// elementwise, and the hom-set bijection round-trips on a small universe.

#include "fincat/coend.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fincat/relative.hpp"
#include "fincat/tuple_category.hpp"

using namespace fincat;

namespace {

struct SmallUniverse {
    SkelCat s;
    TupleCat g;
    Functor i;

    explicit SmallUniverse(int n, int q)
        : s(make_skel_cat(n)), g(make_tuple_cat(skel_base(s), q)), i(length_one_inclusion(g)) {}
};

}  // namespace

TEST_CASE("the lift of a representable is the representable at its image") {
    SmallUniverse u(2, 2);
    // [DERIVED] level sizes frozen from the injection/component count
    SetDiagram X1 = representable_diagram(u.s.cat, 1);
    Lift L1 = lift_diagram(X1, u.i);
    CHECK(L1.diagram.levels == std::vector<int>{0, 0, 1, 2, 2, 4, 4, 8});
    SetDiagram X2 = representable_diagram(u.s.cat, 2);
    Lift L2 = lift_diagram(X2, u.i);
    CHECK(L2.diagram.levels == std::vector<int>{0, 0, 3, 8, 6, 14, 14, 32});

    // independent recount of the same levels through the closed hom formula
    for (int t = 0; t < u.g.cat.num_objects(); ++t) {
        CHECK(L1.diagram.levels[t] ==
              tuple_hom_count(u.g.base, ObjectTuple{false, {1}}, u.g.tuples[t]));
        CHECK(L2.diagram.levels[t] ==
              tuple_hom_count(u.g.base, ObjectTuple{false, {2}}, u.g.tuples[t]));
    }

    // the lifted diagram is itself functorial
    CHECK(validate_set_diagram(L1.diagram).ok);
    CHECK(validate_set_diagram(L2.diagram).ok);

    // canonical comparison with hom(i<1>, -): send the class of (n, theta, x)
    // to theta ∘ i(theta_x), theta_x the x-th nonzero arrow <1> -> n
    SetDiagram R = representable_diagram(u.g.cat, u.i.on_obj[1]);
    SetDiagramMap cmp{&L1.diagram, &R, {}};
    for (int t = 0; t < u.g.cat.num_objects(); ++t) {
        const LiftLevel& lvl = L1.levels[t];
        PointedMap c{lvl.value.size, R.levels[t], {}};
        auto target_hom = u.g.cat.nonzero_hom(u.i.on_obj[1], t);
        for (int e = 1; e <= lvl.value.size; ++e) {
            const LiftGen& gen = lvl.rep(e);
            int theta_x = u.s.cat.nonzero_hom(1, gen.n)[gen.x - 1];
            int composed = u.g.cat.compose(gen.theta, u.i.on_mor[theta_x]);
            auto pos = std::find(target_hom.begin(), target_hom.end(), composed);
            REQUIRE(pos != target_hom.end());
            c.values.push_back(static_cast<int>(pos - target_hom.begin()) + 1);
        }
        cmp.components.push_back(std::move(c));
    }
    CHECK(check_diagram_map(cmp).ok);
    CHECK(cmp.levelwise_bijective());
}

TEST_CASE("empty and constant diagrams lift to constants") {
    SmallUniverse u(2, 2);
    SetDiagram Z = constant_basepoint_diagram(u.s.cat);
    Lift LZ = lift_diagram(Z, u.i);
    for (int s : LZ.diagram.levels) CHECK(s == 0);
}

TEST_CASE("the unit is natural and levelwise bijective on fixtures") {
    SmallUniverse u(2, 2);
    std::vector<SetDiagram> fixtures;
    fixtures.push_back(representable_diagram(u.s.cat, 1));
    fixtures.push_back(representable_diagram(u.s.cat, 2));
    SetDiagram w =
        wedge_diagrams({&fixtures[0], &fixtures[1]}, u.s.cat).total;
    fixtures.push_back(quotient_diagram(w, {{{2, 1, 4}}}).diagram);
    fixtures.push_back(std::move(w));

    for (const auto& X : fixtures) {
        Lift L = lift_diagram(X, u.i);
        SetDiagram istar_LX = precompose(L.diagram, u.i);
        SetDiagramMap eta = unit_map(X, L, istar_LX);
        auto r = check_diagram_map(eta);
        INFO(r.summary());
        CHECK(r.ok);
        CHECK(eta.levelwise_bijective());
    }
}

TEST_CASE("both triangle identities hold elementwise") {
    SmallUniverse u(2, 2);
    SetDiagram X = representable_diagram(u.s.cat, 1);
    SetDiagram A = representable_diagram(u.s.cat, 2);
    SetDiagram Y = lift_diagram(A, u.i).diagram;  // any diagram over the tuple side

    TriangleReport t = check_triangles(X, Y, u.i);
    INFO(t.witness);
    CHECK(t.left_ok);
    CHECK(t.right_ok);

    TriangleReport t2 = check_triangles(A, lift_diagram(X, u.i).diagram, u.i);
    CHECK(t2.left_ok);
    CHECK(t2.right_ok);
}

TEST_CASE("the hom-set bijection round-trips on the small universe") {
    SmallUniverse u(1, 2);
    SetDiagram X = representable_diagram(u.s.cat, 1);
    SetDiagram Y = lift_diagram(X, u.i).diagram;

    AdjunctionReport r = check_adjunction_bijection(X, Y, u.i);
    INFO(r.witness);
    CHECK(r.ok);
    // [DERIVED] pointed Yoneda: both hom-sets are Y(i<1>) plus the zero map
    CHECK(r.hom_left == 2);
    CHECK(r.hom_right == 2);

    SetDiagram X2 = wedge_diagrams({&X, &X}, u.s.cat).total;
    AdjunctionReport r2 = check_adjunction_bijection(X2, Y, u.i);
    INFO(r2.witness);
    CHECK(r2.ok);
    CHECK(r2.hom_left == 4);  // pointed product of two copies

    // and with a quotient on the right
    SetDiagram Q = quotient_diagram(X2, {{{1, 1, 2}}}).diagram;
    AdjunctionReport r3 = check_adjunction_bijection(Q, Y, u.i);
    CHECK(r3.ok);
    CHECK(r3.hom_left == r3.hom_right);
}

TEST_CASE("functoriality of the lift on maps") {
    SmallUniverse u(2, 2);
    SetDiagram A = representable_diagram(u.s.cat, 1);
    SetDiagram B = representable_diagram(u.s.cat, 1);
    SetDiagram w = wedge_diagrams({&A, &B}, u.s.cat).total;
    QuotientResult q = quotient_diagram(w, {{{1, 1, 2}}});

    Lift Lw = lift_diagram(w, u.i);
    Lift Lq = lift_diagram(q.diagram, u.i);
    SetDiagramMap proj{&w, &q.diagram, q.projection_components};
    REQUIRE(check_diagram_map(proj).ok);

    SetDiagramMap Lproj = lifted_map(proj, Lw, Lq);
    CHECK(check_diagram_map(Lproj).ok);

    SetDiagramMap lid = lifted_map(identity_diagram_map(w), Lw, Lw);
    CHECK(lid.components == identity_diagram_map(Lw.diagram).components);

    // L(proj ∘ id) = L(proj) ∘ L(id)
    SetDiagramMap lhs = lifted_map(compose_diagram_maps(proj, identity_diagram_map(w)), Lw, Lq);
    SetDiagramMap rhs = compose_diagram_maps(Lproj, lid);
    CHECK(lhs.components == rhs.components);
}

TEST_CASE("density: the identity-indexed lift evaluates back to the diagram") {
    SmallUniverse u(2, 2);
    SetDiagram X = representable_diagram(u.s.cat, 2);
    DensityReport d = check_density(X);
    INFO(d.witness);
    CHECK(d.ok);

    DensityReport viaff = check_unit_via_density(X, u.i);
    INFO(viaff.witness);
    CHECK(viaff.ok);
}

TEST_CASE("right-induced predicates evaluate through restriction") {
    SmallUniverse u(1, 2);
    SetDiagram X = representable_diagram(u.s.cat, 1);
    SetDiagram Y = lift_diagram(X, u.i).diagram;
    MapPredicate bij = [](const SetDiagramMap& f) { return f.levelwise_bijective(); };
    MapPredicate induced = right_induced(bij, u.i);

    SetDiagramMap idY = identity_diagram_map(Y);
    CHECK(induced(idY));

    SetDiagramMap zero{&Y, &Y, {}};
    for (int s : Y.levels) zero.components.push_back(zero_map(s, s));
    CHECK_FALSE(induced(zero));  // restriction has a non-bijective component at <1>
}

TEST_CASE("relative and creating functor verdicts") {
    FinCategory wa = walking_arrow();
    FinCategory wi = walking_iso();
    Functor F{&wa, &wi, {0, 1}, {0, 1, 2}};

    auto ids_to_isos = relative_functor_report(F, weq_identities(wa), weq_isos(wi));
    CHECK(ids_to_isos.relative);
    CHECK_FALSE(ids_to_isos.creates);  // u is marked in the target but a is not in the source

    auto ids_to_ids = relative_functor_report(F, weq_identities(wa), weq_identities(wi));
    CHECK(ids_to_ids.relative);
    CHECK(ids_to_ids.creates);

    auto all_to_ids = relative_functor_report(F, weq_all(wa), weq_identities(wi));
    CHECK_FALSE(all_to_ids.relative);
}

TEST_CASE("stability of the lift under enlarging the truncation") {
    SkelCat s1 = make_skel_cat(1), s2 = make_skel_cat(2);
    TupleCat g1 = make_tuple_cat(skel_base(s1), 2);
    TupleCat g2 = make_tuple_cat(skel_base(s2), 2);
    Functor incl_C = skel_inclusion(s1, s2);
    Functor incl_D = tuple_cat_inclusion(g1, g2, incl_C);
    Functor i = length_one_inclusion(g1);
    Functor i2 = length_one_inclusion(g2);

    SetDiagram X2 = representable_diagram(s2.cat, 1);
    StabilityReport r = check_stability(X2, incl_C, incl_D, i, i2);
    for (const auto& n : r.notes) INFO(n);
    CHECK(r.bijective);
}
