// Finite categories as dense tables: validation, functors, naturality, and
// the stock fixtures.  Includes deliberately broken tables to confirm the
// validator actually rejects them.

#include "fincat/category.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fincat;

namespace {

// A three-morphism "monoid" whose composition table breaks associativity:
// s∘s = t and s∘t = t∘s = t∘t = id, so (s∘s)∘s = id but s∘(s∘s) = id too —
// tweak one cell below to land on s and the triple (s,s,s) detects it.
FinCategory broken_assoc_monoid() {
    CategoryBuilder b;
    int x = b.add_object("x");
    int e = b.add_morphism("e", x, x);
    int s = b.add_morphism("s", x, x);
    int t = b.add_morphism("t", x, x);
    b.set_identity(x, e);
    b.begin_compose();
    b.set_compose(e, e, e);
    b.set_compose(e, s, s);
    b.set_compose(s, e, s);
    b.set_compose(e, t, t);
    b.set_compose(t, e, t);
    b.set_compose(s, s, t);
    b.set_compose(s, t, e);
    b.set_compose(t, s, s);  // (s∘s)∘s = t∘s = s, but s∘(s∘s) = s∘t = e
    b.set_compose(t, t, e);
    return b.take();
}

}  // namespace

TEST_CASE("stock fixtures validate") {
    for (const FinCategory& c :
         {walking_arrow(), walking_iso(), chain_category(3), terminal_category()}) {
        auto r = validate_category(c);
        INFO(r.summary());
        CHECK(r.ok);
    }
}

TEST_CASE("fixture shapes; [TRIVIAL] counts asserted directly") {
    CHECK(walking_arrow().num_morphisms() == 3);
    CHECK(walking_iso().num_morphisms() == 4);
    // chain on 0<1<...<n: one arrow per ordered pair i<=j
    CHECK(chain_category(3).num_morphisms() == 10);
    CHECK(terminal_category().num_morphisms() == 1);
}

TEST_CASE("validator rejects a broken associativity cell") {
    auto r = validate_category(broken_assoc_monoid());
    REQUIRE_FALSE(r.ok);
    bool mentions_assoc = false;
    for (const auto& p : r.problems)
        if (p.find("associativity") != std::string::npos) mentions_assoc = true;
    CHECK(mentions_assoc);
}

TEST_CASE("validator rejects a missing composite and a bad identity") {
    CategoryBuilder b;
    int x = b.add_object("x");
    int e = b.add_morphism("e", x, x);
    int f = b.add_morphism("f", x, x);
    b.set_identity(x, e);
    b.begin_compose();
    b.set_compose(e, e, e);
    b.set_compose(e, f, f);
    b.set_compose(f, e, f);
    // f∘f left unset
    auto r = validate_category(b.peek());
    REQUIRE_FALSE(r.ok);
    CHECK(r.problems.at(0).find("missing composite") != std::string::npos);

    CategoryBuilder b2;
    b2.add_object("x");
    b2.begin_compose();
    auto r2 = validate_category(b2.peek());
    REQUIRE_FALSE(r2.ok);
    CHECK(r2.problems.at(0).find("identity") != std::string::npos);
}

TEST_CASE("iso detection in the walking iso") {
    FinCategory c = walking_iso();
    for (int m = 0; m < c.num_morphisms(); ++m) CHECK(is_iso(c, m));
    FinCategory a = walking_arrow();
    CHECK(is_iso(a, 0));       // identities are isos
    CHECK_FALSE(is_iso(a, 2)); // the arrow is not
}

TEST_CASE("functor validation catches dropped identities and broken composites") {
    FinCategory wa = walking_arrow();
    FinCategory wi = walking_iso();
    // the evident inclusion walking-arrow -> walking-iso (a |-> u)
    Functor F{&wa, &wi, {0, 1}, {0, 1, 2}};
    CHECK(validate_functor(F).ok);
    CHECK(fully_faithful(identity_functor(wi)));
    CHECK_FALSE(fully_faithful(F));  // hom(x1,x0) grows from 0 to 1

    Functor bad = F;
    bad.on_mor[0] = 2;  // identity of x0 sent to u
    CHECK_FALSE(validate_functor(bad).ok);

    Functor ill = F;
    ill.on_mor[2] = 3;  // a : x0 -> x1 sent to v : x1 -> x0
    CHECK_FALSE(validate_functor(ill).ok);
}

TEST_CASE("naturality is checked square by square") {
    FinCategory ch = chain_category(1);  // the walking arrow as a poset
    Functor id = identity_functor(ch);
    Functor to_top{&ch, &ch, {1, 1}, {}};
    to_top.on_mor = {ch.identities[1], ch.identities[1], ch.identities[1]};
    REQUIRE(validate_functor(to_top).ok);

    // components x |-> (x <= top): the unique candidate, and it is natural
    NatTrans good{&id, &to_top, {ch.hom[0][1].at(0), ch.identities[1]}};
    CHECK(check_natural(good).ok);

    // ill-typed component
    NatTrans bad{&id, &to_top, {ch.identities[0], ch.identities[1]}};
    CHECK_FALSE(check_natural(bad).ok);
}

TEST_CASE("pointed build: zero morphisms absorb") {
    // Free pointed structure on one object plus a basepoint.
    CategoryBuilder b;
    int z = b.add_object("*");
    int x = b.add_object("x");
    int iz = b.add_morphism("id_*", z, z);
    int ix = b.add_morphism("id_x", x, x);
    int to = b.add_morphism("x->*", x, z);
    int from = b.add_morphism("*->x", z, x);
    int zx = b.add_morphism("0_xx", x, x);
    b.set_identity(z, iz);
    b.set_identity(x, ix);
    b.set_basepoint(z);
    b.begin_compose();
    b.set_compose(iz, iz, iz);
    b.set_compose(ix, ix, ix);
    b.set_compose(to, ix, to);
    b.set_compose(iz, to, to);
    b.set_compose(from, iz, from);
    b.set_compose(ix, from, from);
    b.set_compose(from, to, zx);
    b.set_compose(to, from, iz);
    b.set_compose(zx, ix, zx);
    b.set_compose(ix, zx, zx);
    b.set_compose(to, zx, to);
    b.set_compose(zx, from, from);
    b.set_compose(zx, zx, zx);
    b.finish_pointed();
    FinCategory c = b.take();
    auto r = validate_category(c);
    INFO(r.summary());
    REQUIRE(r.ok);
    CHECK(c.zero(x, x) == zx);
    CHECK(c.is_zero_mor(zx));
    CHECK_FALSE(c.is_zero_mor(ix));
    CHECK(c.nonzero_hom(x, x) == std::vector<int>{ix});
    // zero absorbs on both sides
    CHECK(c.compose(zx, ix) == zx);
    CHECK(c.compose(c.zero(x, x), zx) == zx);
}
