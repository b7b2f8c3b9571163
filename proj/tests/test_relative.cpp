// Nerves, relative simplex categories, the classification diagram, Segal
// comparisons, and the prism decomposition of a natural transformation.
// Counting oracles: the nerve of a codiscrete category on m objects has
// m^(k+1) k-simplices; a discrete one keeps its object count in every degree.

#include "fincat/relative.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "fincat/skeletal.hpp"

using namespace fincat;

namespace {

long long power(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("nerve levels of the stock categories") {
    FinCategory wa = walking_arrow();
    for (int k = 0; k <= 4; ++k)
        CHECK(nerve_level(wa, k).size() == static_cast<size_t>(k + 2));
    FinCategory ch = chain_category(2);
    for (int k = 0; k <= 4; ++k)  // monotone chains: (k+3)(k+2)/2
        CHECK(nerve_level(ch, k).size() == static_cast<size_t>((k + 3) * (k + 2) / 2));
    CHECK(check_simplicial_identities(wa, 4).ok);
    CHECK(check_simplicial_identities(ch, 3).ok);
    CHECK(check_simplicial_identities(walking_iso(), 3).ok);
}

TEST_CASE("faces and degeneracies act as expected on a 2-simplex") {
    FinCategory ch = chain_category(2);
    int a01 = ch.hom[0][1].at(0), a12 = ch.hom[1][2].at(0), a02 = ch.hom[0][2].at(0);
    Simplex s{0, {a01, a12}};
    CHECK(face(ch, s, 0) == Simplex{1, {a12}});
    CHECK(face(ch, s, 1) == Simplex{0, {a02}});
    CHECK(face(ch, s, 2) == Simplex{0, {a01}});
    CHECK(degeneracy(ch, s, 0).arrows ==
          std::vector<int>{ch.identities[0], a01, a12});
}

TEST_CASE("marking helpers and their closure properties") {
    FinCategory wi = walking_iso();
    RelativeCategory all{&wi, weq_all(wi)};
    RelativeCategory ids{&wi, weq_identities(wi)};
    RelativeCategory isos{&wi, weq_isos(wi)};
    CHECK(validate_relative(all).ok);
    CHECK(validate_relative(ids).ok);
    CHECK(validate_relative(isos).ok);

    CHECK(weq_contains_isos(all));
    CHECK(weq_contains_isos(isos));
    CHECK_FALSE(weq_contains_isos(ids));  // u is an iso but not an identity
    CHECK(weq_two_out_of_three(all));
    CHECK(weq_two_out_of_three(isos));
}

TEST_CASE("relative simplex categories: codiscrete and discrete extremes") {
    FinCategory wi = walking_iso();
    RelativeCategory all{&wi, weq_all(wi)};
    for (int n = 0; n <= 2; ++n) {
        RelSimplexCat rs = relative_simplex_category(all, n);
        // every hom-set of the walking iso is a singleton, so the width-n
        // category is codiscrete on the 2^(n+1) strings
        CHECK(rs.cat.num_objects() == power(2, n + 1));
        CHECK(rs.cat.num_morphisms() == power(2, n + 1) * power(2, n + 1));
        auto r = validate_category(rs.cat);
        INFO(r.summary());
        CHECK(r.ok);
    }

    FinCategory wa = walking_arrow();
    RelativeCategory ids{&wa, weq_identities(wa)};
    for (int n = 0; n <= 3; ++n) {
        RelSimplexCat rs = relative_simplex_category(ids, n);
        // identity rungs force the discrete category on the n-strings
        CHECK(rs.cat.num_objects() == n + 2);
        CHECK(rs.cat.num_morphisms() == n + 2);
        CHECK(validate_category(rs.cat).ok);
    }
}

TEST_CASE("classification diagram levels of the walking iso, all arrows marked") {
    FinCategory wi = walking_iso();
    RelativeCategory all{&wi, weq_all(wi)};
    ClassificationDiagram CD(all, 3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            // [DERIVED] nerve of a codiscrete category: 2^((n+1)(k+1))
            CHECK(CD.level_count(n, k) == power(2, (n + 1) * (k + 1)));
    CHECK(CD.level_count(3, 3) == 65536);

    auto r = check_bisimplicial_identities(CD, 3, 3);
    INFO(r.summary());
    CHECK(r.ok);
}

TEST_CASE("classification diagram of the walking arrow, identities marked") {
    FinCategory wa = walking_arrow();
    RelativeCategory ids{&wa, weq_identities(wa)};
    ClassificationDiagram CD(ids, 3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            CHECK(CD.level_count(n, k) == n + 2);  // discrete: constant in k
    CHECK(check_bisimplicial_identities(CD, 3, 3).ok);
}

TEST_CASE("Segal comparisons are bijective for honest nerves") {
    FinCategory wi = walking_iso();
    RelativeCategory all{&wi, weq_all(wi)};
    ClassificationDiagram CD(all, 3);
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k) {
            SegalReport s = segal_check(CD, n, k);
            INFO("n=" << n << " k=" << k << " " << s.witness);
            CHECK(s.bijective);
            CHECK(s.source_size == power(2, (n + 1) * (k + 1)));
        }

    FinCategory ch = chain_category(2);
    RelativeCategory isos{&ch, weq_isos(ch)};
    ClassificationDiagram CDc(isos, 2);
    SegalReport s = segal_check(CDc, 2, 1);
    INFO(s.witness);
    CHECK(s.bijective);
}

TEST_CASE("the Segal check detects a fake 2-simplex level") {
    // two vertices, edges e0: 0 -> 1 and e1: 1 -> 0, and a single 2-simplex
    // with spine (e0, e1); the chain (e1, e0) is compatible but unhit
    SimplicialLevels S;
    S.sizes = {2, 2, 1};
    S.face.resize(3);
    S.face[1] = {{1, 0}, {0, 1}};          // ends, then starts
    S.face[2] = {{1}, {0}, {0}};           // d0 = e1, d2 = e0; d1 unused here
    SegalReport r = segal_check(S, 2);
    CHECK_FALSE(r.bijective);
    CHECK(r.source_size == 1);
    CHECK(r.target_size == 2);
    CHECK(r.witness.find("not surjective") != std::string::npos);
    CHECK(r.witness.find("(1,0)") != std::string::npos);
}

TEST_CASE("prism decomposition of a non-trivial homotopy") {
    FinCategory wa = walking_arrow();
    FinCategory pt = terminal_category();
    Functor F{&pt, &wa, {0}, {wa.identities[0]}};
    Functor G{&pt, &wa, {1}, {wa.identities[1]}};
    NatTrans p{&F, &G, {wa.hom[0][1].at(0)}};
    PrismReport r = check_prism_homotopy(p, 3);
    INFO(r.witness);
    CHECK(r.ok);
    CHECK_FALSE(r.constant);
}

TEST_CASE("prism decomposition of the identity homotopy is constant") {
    FinCategory wa = walking_arrow();
    Functor id = identity_functor(wa);
    NatTrans p{&id, &id, {wa.identities[0], wa.identities[1]}};
    PrismReport r = check_prism_homotopy(p, 3);
    CHECK(r.ok);
    CHECK(r.constant);
}

TEST_CASE("prism decomposition of the chain collapse") {
    FinCategory ch = chain_category(2);
    Functor F = identity_functor(ch);
    Functor G{&ch, &ch, {2, 2, 2}, {}};
    G.on_mor.assign(ch.num_morphisms(), ch.identities[2]);
    NatTrans p{&F, &G, {ch.hom[0][2].at(0), ch.hom[1][2].at(0), ch.identities[2]}};
    PrismReport r = check_prism_homotopy(p, 2);
    INFO(r.witness);
    CHECK(r.ok);
    CHECK_FALSE(r.constant);
}

TEST_CASE("the prism checker refuses a non-natural transformation") {
    FinCategory wa = walking_arrow();
    SkelCat s1 = make_skel_cat(1);
    Functor F{&wa, &s1.cat, {1, 1}, {}};
    F.on_mor.assign(wa.num_morphisms(), s1.cat.identities[1]);
    REQUIRE(validate_functor(F).ok);
    NatTrans bad{&F, &F, {s1.cat.identities[1], s1.id_of(zero_map(1, 1))}};
    CHECK_THROWS_AS(check_prism_homotopy(bad, 2), std::invalid_argument);
}
