#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "fincat/diagram.hpp"
#include "fincat/union_find.hpp"

// The left adjoint to precomposition along a pointed functor i: C -> D,
// computed pointwise as a quotient of generators (n, theta, x) — an object n of
// C, a nonzero arrow theta: i(n) -> t, an element x of X(n) — by the coend
// relations, via union-find.  Class representatives are the lexicographically
// least generators, which keeps every downstream table canonical.

namespace fincat {

struct LiftGen {
    int n = 0;      // C object
    int theta = 0;  // D morphism id, nonzero, i(n) -> t
    int x = 0;      // element of X(n), 1-based
};

struct LiftLevel {
    int target = 0;  // D object id
    PointedSet value;
    std::vector<LiftGen> gens;   // node k is gens[k-1]; node 0 is the basepoint
    std::vector<int> node_class; // per node: element index in value, 0 = basepoint
    std::vector<int> rep_node;   // per element 1..size: least node in the class

    // lookup scaffolding
    std::vector<long long> offset;                        // per C object: first node
    std::vector<std::unordered_map<int, int>> theta_pos;  // per C object: D mor -> slot
    std::vector<int> level;                               // X's levels (copied)

    int node_of(int n, int theta, int x) const {
        auto it = theta_pos[n].find(theta);
        if (it == theta_pos[n].end())
            throw std::logic_error("lift: unknown generator arrow");
        return static_cast<int>(offset[n] + static_cast<long long>(it->second) * level[n] + x - 1);
    }

    // class of the generator (n, theta, x); x = 0 or theta zero handled by caller
    int class_of(int n, int theta, int x) const { return node_class[node_of(n, theta, x)]; }

    const LiftGen& rep(int element) const { return gens[rep_node[element] - 1]; }
};

inline LiftLevel lift_level(const SetDiagram& X, const Functor& i, int t) {
    const FinCategory& C = *i.dom;
    const FinCategory& D = *i.cod;
    if (X.index != &C) throw std::invalid_argument("lift_level: X does not live over dom(i)");
    if (t < 0 || t >= D.num_objects()) throw std::invalid_argument("lift_level: target not in D");

    LiftLevel L;
    L.target = t;
    L.level = X.levels;
    L.offset.assign(C.num_objects(), 0);
    L.theta_pos.resize(C.num_objects());

    std::vector<std::vector<int>> nz(C.num_objects());
    long long running = 1;
    for (int n = 0; n < C.num_objects(); ++n) {
        nz[n] = D.nonzero_hom(i.on_obj[n], t);
        L.offset[n] = running;
        for (size_t k = 0; k < nz[n].size(); ++k) L.theta_pos[n][nz[n][k]] = static_cast<int>(k);
        running += static_cast<long long>(nz[n].size()) * X.levels[n];
        for (int theta : nz[n])
            for (int x = 1; x <= X.levels[n]; ++x) L.gens.push_back(LiftGen{n, theta, x});
    }

    UnionFind uf(static_cast<int>(running));
    // one relation per (arrow h: n -> n', theta': i(n') -> t, x in X(n)):
    //   (n, theta' ∘ i(h), x)  ~  (n', theta', X(h)(x))
    // with either side falling to the basepoint when zero.
    for (int h = 0; h < C.num_morphisms(); ++h) {
        int n = C.mor_src[h], n2 = C.mor_dst[h];
        if (X.levels[n] == 0) continue;
        for (int theta2 : nz[n2]) {
            int pulled = D.compose_table[static_cast<size_t>(theta2) * D.num_morphisms() +
                                         i.on_mor[h]];
            bool pulled_zero = D.is_zero_mor(pulled);
            for (int x = 1; x <= X.levels[n]; ++x) {
                int lhs = pulled_zero ? 0 : L.node_of(n, pulled, x);
                int xr = X.action[h].apply(x);
                int rhs = xr == 0 ? 0 : L.node_of(n2, theta2, xr);
                uf.unite(lhs, rhs);
            }
        }
    }

    int G = static_cast<int>(L.gens.size());
    L.node_class.assign(G + 1, 0);
    for (int node = 1; node <= G; ++node)
        if (uf.find(node) == node && node != uf.find(0)) {
            L.node_class[node] = ++L.value.size;
            L.rep_node.push_back(node);
        }
    L.rep_node.insert(L.rep_node.begin(), 0);  // 1-based classes
    for (int node = 1; node <= G; ++node) L.node_class[node] = L.node_class[uf.find(node)];
    return L;
}

struct Lift {
    const SetDiagram* X = nullptr;
    const Functor* incl = nullptr;  // i: C -> D
    SetDiagram diagram;             // LX, over D
    std::vector<LiftLevel> levels;  // per D object
};

// Evaluate the induced map on classes by postcomposition on the arrow index,
// double-checking that every generator of a class lands in the same place.
inline PointedMap lift_transport(const LiftLevel& from, const LiftLevel& to, const FinCategory& D,
                                 int u) {
    PointedMap out{from.value.size, to.value.size, std::vector<int>(from.value.size, -1)};
    int G = static_cast<int>(from.gens.size());
    for (int node = 1; node <= G; ++node) {
        int c = from.node_class[node];
        if (c == 0) continue;
        const LiftGen& g = from.gens[node - 1];
        int pushed = D.compose(u, g.theta);
        int img = D.is_zero_mor(pushed) ? 0 : to.class_of(g.n, pushed, g.x);
        if (out.values[c - 1] >= 0 && out.values[c - 1] != img)
            throw std::logic_error("lift: induced map is inconsistent across a class");
        out.values[c - 1] = img;
    }
    return out;
}

inline Lift lift_diagram(const SetDiagram& X, const Functor& i) {
    const FinCategory& D = *i.cod;
    Lift L;
    L.X = &X;
    L.incl = &i;
    L.diagram.index = &D;
    for (int t = 0; t < D.num_objects(); ++t) {
        L.levels.push_back(lift_level(X, i, t));
        L.diagram.levels.push_back(L.levels.back().value.size);
    }
    for (int u = 0; u < D.num_morphisms(); ++u)
        L.diagram.action.push_back(
            lift_transport(L.levels[D.mor_src[u]], L.levels[D.mor_dst[u]], D, u));
    return L;
}

// The unit X(p) -> (LX)(i p): x |-> [p, 1_{i p}, x].
inline PointedMap unit_component(const SetDiagram& X, const Lift& L, int p) {
    const FinCategory& D = *L.incl->cod;
    int ip = L.incl->on_obj[p];
    const LiftLevel& lvl = L.levels[ip];
    PointedMap out{X.levels[p], lvl.value.size, {}};
    for (int x = 1; x <= X.levels[p]; ++x)
        out.values.push_back(lvl.class_of(p, D.identities[ip], x));
    return out;
}

inline SetDiagramMap unit_map(const SetDiagram& X, const Lift& L, const SetDiagram& istar_LX) {
    SetDiagramMap t{&X, &istar_LX, {}};
    for (int p = 0; p < X.index->num_objects(); ++p) t.components.push_back(unit_component(X, L, p));
    return t;
}

// The counit (L i*Y)(t) -> Y(t): [n, theta, y] |-> Y(theta)(y), rechecked on
// every generator of each class.
inline PointedMap counit_component(const SetDiagram& Y, const Lift& L_istarY, int t) {
    const LiftLevel& lvl = L_istarY.levels[t];
    PointedMap out{lvl.value.size, Y.levels[t], std::vector<int>(lvl.value.size, -1)};
    int G = static_cast<int>(lvl.gens.size());
    for (int node = 1; node <= G; ++node) {
        int c = lvl.node_class[node];
        if (c == 0) continue;
        const LiftGen& g = lvl.gens[node - 1];
        int img = Y.action[g.theta].apply(g.x);
        if (out.values[c - 1] >= 0 && out.values[c - 1] != img)
            throw std::logic_error("counit: class with inconsistent images (signals a bug)");
        out.values[c - 1] = img;
    }
    for (int& v : out.values)
        if (v < 0) throw std::logic_error("counit: class with no generator");
    return out;
}

// L applied to a diagram map f: X -> X', expressed on canonical presentations.
inline PointedMap lifted_map_component(const SetDiagramMap& f, const LiftLevel& from,
                                       const LiftLevel& to) {
    PointedMap out{from.value.size, to.value.size, std::vector<int>(from.value.size, -1)};
    int G = static_cast<int>(from.gens.size());
    for (int node = 1; node <= G; ++node) {
        int c = from.node_class[node];
        if (c == 0) continue;
        const LiftGen& g = from.gens[node - 1];
        int fx = f.components[g.n].apply(g.x);
        int img = fx == 0 ? 0 : to.class_of(g.n, g.theta, fx);
        if (out.values[c - 1] >= 0 && out.values[c - 1] != img)
            throw std::logic_error("lift: image of a map is inconsistent across a class");
        out.values[c - 1] = img;
    }
    return out;
}

inline SetDiagramMap lifted_map(const SetDiagramMap& f, const Lift& LX, const Lift& LX2) {
    SetDiagramMap out{&LX.diagram, &LX2.diagram, {}};
    for (size_t t = 0; t < LX.levels.size(); ++t)
        out.components.push_back(lifted_map_component(f, LX.levels[t], LX2.levels[t]));
    return out;
}

// ---------------------------------------------------------------------------
// Triangle identities, elementwise.

struct TriangleReport {
    bool left_ok = true, right_ok = true;
    std::string witness;
};

inline TriangleReport check_triangles(const SetDiagram& X, const SetDiagram& Y, const Functor& i) {
    TriangleReport rep;
    const FinCategory& C = *i.dom;
    const FinCategory& D = *i.cod;

    // left: eps_{LX} ∘ L(eta_X) = 1_{LX}
    Lift LX = lift_diagram(X, i);
    SetDiagram istar_LX = precompose(LX.diagram, i);
    SetDiagramMap eta = unit_map(X, LX, istar_LX);
    Lift L_istar_LX = lift_diagram(istar_LX, i);
    for (int t = 0; t < D.num_objects(); ++t) {
        PointedMap Leta = lifted_map_component(eta, LX.levels[t], L_istar_LX.levels[t]);
        PointedMap eps = counit_component(LX.diagram, L_istar_LX, t);
        if (compose(eps, Leta) != identity_map(LX.diagram.levels[t])) {
            rep.left_ok = false;
            rep.witness = "left triangle fails at " + D.objects[t];
        }
    }

    // right: eps_{Y, i p} ∘ eta_{i*Y, p} = 1_{(i*Y) p}
    SetDiagram istar_Y = precompose(Y, i);
    Lift L_istar_Y = lift_diagram(istar_Y, i);
    for (int p = 0; p < C.num_objects(); ++p) {
        PointedMap eta_p = unit_component(istar_Y, L_istar_Y, p);
        PointedMap eps_ip = counit_component(Y, L_istar_Y, i.on_obj[p]);
        if (compose(eps_ip, eta_p) != identity_map(istar_Y.levels[p])) {
            rep.right_ok = false;
            rep.witness = "right triangle fails at " + C.objects[p];
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The hom-set bijection  Phi: hom(LX, Y) -> hom(X, i*Y),  Psi its inverse.

struct AdjunctionReport {
    bool ok = true;
    long long hom_left = 0, hom_right = 0;
    std::string witness;
};

inline AdjunctionReport check_adjunction_bijection(const SetDiagram& X, const SetDiagram& Y,
                                                   const Functor& i,
                                                   long long budget = 1'000'000) {
    AdjunctionReport rep;
    Lift LX = lift_diagram(X, i);
    SetDiagram istar_LX = precompose(LX.diagram, i);
    SetDiagramMap eta = unit_map(X, LX, istar_LX);
    SetDiagram istar_Y = precompose(Y, i);

    auto left = enum_diagram_maps(LX.diagram, Y, budget);
    auto right = enum_diagram_maps(X, istar_Y, budget);
    rep.hom_left = static_cast<long long>(left.size());
    rep.hom_right = static_cast<long long>(right.size());
    if (rep.hom_left != rep.hom_right) {
        rep.ok = false;
        rep.witness = "hom-set sizes differ: " + std::to_string(rep.hom_left) + " vs " +
                      std::to_string(rep.hom_right);
        return rep;
    }

    auto phi = [&](const SetDiagramMap& g) {
        // i*(g) ∘ eta_X, componentwise
        std::vector<PointedMap> comps;
        for (int p = 0; p < X.index->num_objects(); ++p)
            comps.push_back(compose(g.components[i.on_obj[p]], eta.components[p]));
        return comps;
    };

    // Psi(f) = eps_Y ∘ L(f); comparing Phi(Psi(f)) and Psi(Phi(g)) against the
    // originals gives the round trip both ways.
    Lift L_istar_Y = lift_diagram(istar_Y, i);
    auto psi = [&](const SetDiagramMap& f) {
        std::vector<PointedMap> comps;
        for (int t = 0; t < Y.index->num_objects(); ++t) {
            PointedMap Lf = lifted_map_component(f, LX.levels[t], L_istar_Y.levels[t]);
            comps.push_back(compose(counit_component(Y, L_istar_Y, t), Lf));
        }
        return comps;
    };

    for (const auto& g : left) {
        SetDiagramMap f{&X, &istar_Y, phi(g)};
        if (psi(f) != g.components) {
            rep.ok = false;
            rep.witness = "Psi(Phi(g)) != g";
            return rep;
        }
    }
    std::vector<std::vector<PointedMap>> seen;
    for (const auto& f : right) {
        SetDiagramMap g{&LX.diagram, &Y, psi(f)};
        if (phi(g) != f.components) {
            rep.ok = false;
            rep.witness = "Phi(Psi(f)) != f";
            return rep;
        }
        seen.push_back(g.components);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        rep.ok = false;
        rep.witness = "Psi is not injective";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Density: the lift along the identity functor evaluates back to X itself.

struct DensityReport {
    bool ok = true;
    std::string witness;
};

inline DensityReport check_density(const SetDiagram& X) {
    DensityReport rep;
    const FinCategory& C = *X.index;
    Functor identity = identity_functor(C);
    for (int p = 0; p < C.num_objects(); ++p) {
        LiftLevel lvl = lift_level(X, identity, p);
        // evaluation [n, theta, x] |-> X(theta)(x)
        PointedMap eval{lvl.value.size, X.levels[p], std::vector<int>(lvl.value.size, -1)};
        bool consistent = true;
        for (size_t node = 1; node <= lvl.gens.size(); ++node) {
            int c = lvl.node_class[node];
            if (c == 0) continue;
            const LiftGen& g = lvl.gens[node - 1];
            int img = X.action[g.theta].apply(g.x);
            if (eval.values[c - 1] >= 0 && eval.values[c - 1] != img) consistent = false;
            eval.values[c - 1] = img;
        }
        if (!consistent || !eval.is_bijective()) {
            rep.ok = false;
            rep.witness = "evaluation not bijective at " + C.objects[p];
        }
    }
    return rep;
}

// For fully faithful i, the unit composed with arrow-index transport and
// evaluation is the identity of X(p).  ff_inverse is the hom-bijection's
// inverse on morphisms (-1 where undefined).
inline std::vector<int> ff_inverse(const Functor& i) {
    std::vector<int> inv(i.cod->num_morphisms(), -1);
    for (int m = 0; m < i.dom->num_morphisms(); ++m) inv[i.on_mor[m]] = m;
    return inv;
}

inline DensityReport check_unit_via_density(const SetDiagram& X, const Functor& i) {
    DensityReport rep;
    const FinCategory& C = *i.dom;
    const FinCategory& D = *i.cod;
    Functor identity = identity_functor(C);
    std::vector<int> inv = ff_inverse(i);
    for (int p = 0; p < C.num_objects(); ++p) {
        LiftLevel along_i = lift_level(X, i, i.on_obj[p]);
        LiftLevel along_id = lift_level(X, identity, p);
        // transport [n, theta, x] |-> [n, i^{-1}(theta), x]
        PointedMap transport{along_i.value.size, along_id.value.size,
                             std::vector<int>(along_i.value.size, -1)};
        for (size_t node = 1; node <= along_i.gens.size(); ++node) {
            int c = along_i.node_class[node];
            if (c == 0) continue;
            const LiftGen& g = along_i.gens[node - 1];
            if (inv[g.theta] < 0) {
                rep.ok = false;
                rep.witness = "arrow " + D.mor_names[g.theta] + " has no preimage (i not full)";
                return rep;
            }
            int img = along_id.class_of(g.n, inv[g.theta], g.x);
            if (transport.values[c - 1] >= 0 && transport.values[c - 1] != img) {
                rep.ok = false;
                rep.witness = "transport inconsistent at " + C.objects[p];
                return rep;
            }
            transport.values[c - 1] = img;
        }
        PointedMap eval{along_id.value.size, X.levels[p], {}};
        for (int c = 1; c <= along_id.value.size; ++c) {
            const LiftGen& g = along_id.rep(c);
            eval.values.push_back(X.action[g.theta].apply(g.x));
        }
        PointedMap eta{X.levels[p], along_i.value.size, {}};
        for (int x = 1; x <= X.levels[p]; ++x)
            eta.values.push_back(along_i.class_of(p, D.identities[i.on_obj[p]], x));
        if (compose(eval, compose(transport, eta)) != identity_map(X.levels[p])) {
            rep.ok = false;
            rep.witness = "unit-transport-evaluation composite not the identity at " + C.objects[p];
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Right-induced predicates: S^i holds of f over D iff S holds of i*f.

using MapPredicate = std::function<bool(const SetDiagramMap&)>;

inline MapPredicate right_induced(MapPredicate S, const Functor& i) {
    const Functor* ip = &i;
    return [S = std::move(S), ip](const SetDiagramMap& f) {
        SetDiagram a = precompose(*f.src, *ip);
        SetDiagram b = precompose(*f.dst, *ip);
        SetDiagramMap g = precompose_map(f, *ip, a, b);
        return S(g);
    };
}

// Relative / creating functor checks on finite categories with marked arrows.
struct RelFunctorReport {
    bool relative = true;  // F(W) ⊆ W'
    bool creates = true;   // f ∈ W  ⟺  F(f) ∈ W'
    std::string witness;
};

inline RelFunctorReport relative_functor_report(const Functor& F, const std::vector<char>& W,
                                                const std::vector<char>& W2) {
    RelFunctorReport rep;
    for (int m = 0; m < F.dom->num_morphisms(); ++m) {
        bool in = W[m], out = W2[F.on_mor[m]];
        if (in && !out) {
            rep.relative = false;
            rep.creates = false;
            rep.witness = "marked arrow " + F.dom->mor_names[m] + " maps to an unmarked one";
            return rep;
        }
        if (!in && out) {
            rep.creates = false;
            rep.witness = "unmarked arrow " + F.dom->mor_names[m] + " maps to a marked one";
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Truncation stability diagnostic: compare the lift computed in a universe
// against the same computation in an enlarged one, through the canonical
// comparison map.  Observational only.

struct StabilityReport {
    bool bijective = true;
    std::vector<std::string> notes;
};

// incl_C: C -> C', incl_D: D -> D', i: C -> D, i2: C' -> D', with
// i2 ∘ incl_C = incl_D ∘ i.  X2 lives over C'; the small diagram is its
// restriction along incl_C.
inline StabilityReport check_stability(const SetDiagram& X2, const Functor& incl_C,
                                       const Functor& incl_D, const Functor& i,
                                       const Functor& i2) {
    StabilityReport rep;
    SetDiagram X = precompose(X2, incl_C);
    const FinCategory& D = *i.cod;
    for (int t = 0; t < D.num_objects(); ++t) {
        LiftLevel small = lift_level(X, i, t);
        LiftLevel big = lift_level(X2, i2, incl_D.on_obj[t]);
        // comparison [n, theta, x] |-> [incl_C n, incl_D theta, x]
        std::vector<int> image(small.value.size, -1);
        bool injective = true;
        for (size_t node = 1; node <= small.gens.size(); ++node) {
            int c = small.node_class[node];
            if (c == 0) continue;
            const LiftGen& g = small.gens[node - 1];
            image[c - 1] = big.class_of(incl_C.on_obj[g.n], incl_D.on_mor[g.theta], g.x);
        }
        std::vector<char> hit(big.value.size + 1, 0);
        for (int v : image) {
            if (v >= 0 && hit[v]) injective = false;
            if (v >= 0) hit[v] = 1;
        }
        bool surjective = true;
        for (int c = 1; c <= big.value.size; ++c)
            if (!hit[c]) surjective = false;
        if (!injective || !surjective) {
            rep.bijective = false;
            rep.notes.push_back("at " + D.objects[t] + ": comparison is " +
                                (injective ? "" : "non-injective ") +
                                (surjective ? "" : "non-surjective"));
        }
    }
    return rep;
}

}  // namespace fincat
