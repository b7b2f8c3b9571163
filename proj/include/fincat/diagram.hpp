#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/pointed_set.hpp"
#include "fincat/rng.hpp"

// Diagrams of pointed finite sets over a finite pointed index category, as
// explicit tables, plus the maps between them.  Category-valued diagrams (for
// the levelwise nerve) live here too.

namespace fincat {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SetDiagram {
    const FinCategory* index = nullptr;
    std::vector<int> levels;         // per index object: size of the pointed set there
    std::vector<PointedMap> action;  // per index morphism

    int level(int obj) const { return levels[obj]; }
};

inline CatReport validate_set_diagram(const SetDiagram& X) {
    CatReport rep;
    const FinCategory& C = *X.index;
    if (static_cast<int>(X.levels.size()) != C.num_objects() ||
        static_cast<int>(X.action.size()) != C.num_morphisms()) {
        rep.fail("diagram tables have wrong shape");
        return rep;
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        const PointedMap& a = X.action[m];
        if (!a.well_formed() || a.dom != X.levels[C.mor_src[m]] || a.cod != X.levels[C.mor_dst[m]])
            rep.fail("action at " + C.mor_names[m] + " ill-typed");
    }
    if (!rep.ok) return rep;
    for (int x = 0; x < C.num_objects(); ++x)
        if (X.action[C.identities[x]] != identity_map(X.levels[x]))
            rep.fail("identity of " + C.objects[x] + " does not act as the identity");
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g = 0; g < C.num_morphisms(); ++g)
            if (C.composable(g, f) &&
                X.action[C.compose(g, f)] != compose(X.action[g], X.action[f])) {
                rep.fail("functoriality fails at (" + C.mor_names[g] + ", " + C.mor_names[f] + ")");
                return rep;
            }
    if (C.pointed() && X.levels[C.basepoint] != 0)
        rep.fail("basepoint level is not <0>");
    return rep;
}

struct SetDiagramMap {
    const SetDiagram* src = nullptr;
    const SetDiagram* dst = nullptr;
    std::vector<PointedMap> components;  // per index object

    bool levelwise_bijective() const {
        for (const auto& c : components)
            if (!c.is_bijective()) return false;
        return true;
    }
};

inline CatReport check_diagram_map(const SetDiagramMap& t) {
    CatReport rep;
    const FinCategory& C = *t.src->index;
    if (t.dst->index != &C) {
        rep.fail("source and target live over different index categories");
        return rep;
    }
    if (static_cast<int>(t.components.size()) != C.num_objects()) {
        rep.fail("component missing for some object");
        return rep;
    }
    for (int x = 0; x < C.num_objects(); ++x) {
        const PointedMap& c = t.components[x];
        if (!c.well_formed() || c.dom != t.src->levels[x] || c.cod != t.dst->levels[x])
            rep.fail("component at " + C.objects[x] + " ill-typed");
    }
    if (!rep.ok) return rep;
    for (int m = 0; m < C.num_morphisms(); ++m) {
        int a = C.mor_src[m], b = C.mor_dst[m];
        if (compose(t.components[b], t.src->action[m]) !=
            compose(t.dst->action[m], t.components[a]))
            rep.fail("naturality square fails at " + C.mor_names[m]);
    }
    return rep;
}

inline SetDiagramMap identity_diagram_map(const SetDiagram& X) {
    SetDiagramMap t{&X, &X, {}};
    for (int s : X.levels) t.components.push_back(identity_map(s));
    return t;
}

inline SetDiagramMap compose_diagram_maps(const SetDiagramMap& g, const SetDiagramMap& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose_diagram_maps: middle mismatch");
    SetDiagramMap h{f.src, g.dst, {}};
    for (size_t x = 0; x < f.components.size(); ++x)
        h.components.push_back(compose(g.components[x], f.components[x]));
    return h;
}

// ---------------------------------------------------------------------------
// Stock diagrams.

inline SetDiagram constant_basepoint_diagram(const FinCategory& C) {
    SetDiagram X{&C, std::vector<int>(C.num_objects(), 0), {}};
    for (int m = 0; m < C.num_morphisms(); ++m) X.action.push_back(zero_map(0, 0));
    return X;
}

// The pointed hom diagram hom(c, -): level at x is the set of nonzero
// morphisms c -> x, acting by postcomposition.  Needs a pointed index.
inline SetDiagram representable_diagram(const FinCategory& C, int c) {
    SetDiagram X{&C, {}, {}};
    // position of each nonzero morphism within its source hom-list
    std::vector<int> pos(C.num_morphisms(), 0);
    for (int x = 0; x < C.num_objects(); ++x) {
        auto nz = C.nonzero_hom(c, x);
        for (size_t k = 0; k < nz.size(); ++k) pos[nz[k]] = static_cast<int>(k) + 1;
        X.levels.push_back(static_cast<int>(nz.size()));
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        int a = C.mor_src[m], b = C.mor_dst[m];
        auto nz = C.nonzero_hom(c, a);
        PointedMap act{static_cast<int>(nz.size()), X.levels[b], {}};
        for (int theta : nz) {
            int comp = C.compose(m, theta);
            act.values.push_back(C.is_zero_mor(comp) ? 0 : pos[comp]);
        }
        X.action.push_back(std::move(act));
    }
    return X;
}

struct DiagramWedge {
    SetDiagram total;
    std::vector<SetDiagramMap> inclusions;  // src pointers into the caller's summands
};

inline DiagramWedge wedge_diagrams(const std::vector<const SetDiagram*>& summands,
                                   const FinCategory& C) {
    DiagramWedge w;
    w.total.index = &C;
    w.total.levels.assign(C.num_objects(), 0);
    for (const auto* X : summands)
        for (int x = 0; x < C.num_objects(); ++x) w.total.levels[x] += X->levels[x];
    for (int m = 0; m < C.num_morphisms(); ++m) {
        int a = C.mor_src[m], b = C.mor_dst[m];
        PointedMap act{w.total.levels[a], w.total.levels[b], {}};
        int dst_off = 0;
        for (const auto* X : summands) {
            for (int v : X->action[m].values) act.values.push_back(v == 0 ? 0 : dst_off + v);
            dst_off += X->levels[b];
        }
        w.total.action.push_back(std::move(act));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Quotient by the congruence generated by a list of identifications, closed
// under the diagram's action (a worklist over a per-level union-find).
// Identifying an element with 0 sends its whole class to the basepoint.

struct QuotientResult {
    SetDiagram diagram;
    std::vector<PointedMap> projection_components;  // from the original diagram
};

inline QuotientResult quotient_diagram(const SetDiagram& X,
                                       const std::vector<std::array<int, 3>>& pairs) {
    const FinCategory& C = *X.index;
    int O = C.num_objects();
    std::vector<std::vector<int>> parent(O);
    for (int x = 0; x < O; ++x) {
        parent[x].resize(X.levels[x] + 1);
        for (int k = 0; k <= X.levels[x]; ++k) parent[x][k] = k;
    }
    auto find = [&](int x, int k) {
        while (parent[x][k] != k) k = parent[x][k] = parent[x][parent[x][k]];
        return k;
    };
    std::vector<std::array<int, 3>> work(pairs.begin(), pairs.end());
    while (!work.empty()) {
        auto [x, a, bb] = work.back();
        work.pop_back();
        int ra = find(x, a), rb = find(x, bb);
        if (ra == rb) continue;
        if (ra > rb) std::swap(ra, rb);  // keep the smaller element (and 0) as root
        parent[x][rb] = ra;
        for (int m = 0; m < C.num_morphisms(); ++m)
            if (C.mor_src[m] == x)
                work.push_back({C.mor_dst[m], X.action[m].apply(ra), X.action[m].apply(rb)});
    }

    QuotientResult out;
    out.diagram.index = &C;
    std::vector<std::vector<int>> cls(O);  // element -> class index (0 for basepoint class)
    for (int x = 0; x < O; ++x) {
        cls[x].assign(X.levels[x] + 1, 0);
        int next = 0;
        for (int k = 1; k <= X.levels[x]; ++k)
            if (find(x, k) == k && find(x, 0) != k) cls[x][k] = ++next;
        for (int k = 1; k <= X.levels[x]; ++k) cls[x][k] = cls[x][find(x, k)];
        out.diagram.levels.push_back(next);
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        int a = C.mor_src[m], b = C.mor_dst[m];
        PointedMap act{out.diagram.levels[a], out.diagram.levels[b],
                       std::vector<int>(out.diagram.levels[a], -1)};
        for (int k = 1; k <= X.levels[a]; ++k) {
            int c = cls[a][k];
            if (!c) continue;
            int img = cls[b][X.action[m].apply(k)];
            if (act.values[c - 1] >= 0 && act.values[c - 1] != img)
                throw std::logic_error("quotient_diagram: congruence closure is inconsistent");
            act.values[c - 1] = img;
        }
        out.diagram.action.push_back(std::move(act));
    }
    for (int x = 0; x < O; ++x) {
        PointedMap p{X.levels[x], out.diagram.levels[x], {}};
        for (int k = 1; k <= X.levels[x]; ++k) p.values.push_back(cls[x][k]);
        out.projection_components.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Precomposition with a functor into the index category.

inline SetDiagram precompose(const SetDiagram& X, const Functor& F) {
    if (F.cod != X.index) throw std::invalid_argument("precompose: index mismatch");
    SetDiagram Y{F.dom, {}, {}};
    for (int x : F.on_obj) Y.levels.push_back(X.levels[x]);
    for (int m : F.on_mor) Y.action.push_back(X.action[m]);
    return Y;
}

// Components reindexed along F; src/dst must already be the precomposed
// diagrams (the caller owns them).
inline SetDiagramMap precompose_map(const SetDiagramMap& t, const Functor& F,
                                    const SetDiagram& newsrc, const SetDiagram& newdst) {
    if (F.cod != t.src->index) throw std::invalid_argument("precompose_map: index mismatch");
    SetDiagramMap out{&newsrc, &newdst, {}};
    for (int x : F.on_obj) out.components.push_back(t.components[x]);
    return out;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration of all maps X -> Y.  The budget caps the number of
// candidate components generated; exceeding it raises, never truncates.

inline std::vector<SetDiagramMap> enum_diagram_maps(const SetDiagram& X, const SetDiagram& Y,
                                                    long long budget = 1'000'000) {
    if (X.index != Y.index) throw std::invalid_argument("enum_diagram_maps: index mismatch");
    const FinCategory& C = *X.index;
    int O = C.num_objects();
    std::vector<SetDiagramMap> out;
    std::vector<PointedMap> comps(O);
    long long generated = 0;

    // naturality squares touching only objects <= x are checked as soon as x
    // is assigned, so dead branches die early
    auto consistent = [&](int x) {
        for (int m = 0; m < C.num_morphisms(); ++m) {
            int a = C.mor_src[m], b = C.mor_dst[m];
            if (a > x || b > x || (a != x && b != x)) continue;
            if (compose(comps[b], X.action[m]) != compose(Y.action[m], comps[a])) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int x) -> void {
        if (x == O) {
            out.push_back(SetDiagramMap{&X, &Y, comps});
            return;
        }
        PointedMap c{X.levels[x], Y.levels[x], std::vector<int>(X.levels[x], 0)};
        while (true) {
            if (++generated > budget)
                throw BudgetExceeded("enum_diagram_maps: budget of " + std::to_string(budget) +
                                     " candidate components exceeded");
            comps[x] = c;
            if (consistent(x)) self(self, x + 1);
            int k = X.levels[x] - 1;
            while (k >= 0 && c.values[k] == Y.levels[x]) c.values[k--] = 0;
            if (k < 0) break;
            ++c.values[k];
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Seeded random diagrams: a wedge of representables at random objects followed
// by a random congruence quotient.  Functorial by construction and rich enough
// to exercise class structure (every finite diagram is such a quotient).

inline SetDiagram random_set_diagram(const FinCategory& C, SeededRng& rng, int max_summands = 3,
                                     int max_merges = 3) {
    std::vector<int> nonbase;
    for (int x = 0; x < C.num_objects(); ++x)
        if (x != C.basepoint) nonbase.push_back(x);
    int summands = rng.between(1, max_summands);
    std::vector<SetDiagram> reps;
    reps.reserve(summands);
    for (int s = 0; s < summands; ++s)
        reps.push_back(representable_diagram(C, nonbase[rng.below(static_cast<int>(nonbase.size()))]));
    std::vector<const SetDiagram*> ptrs;
    for (auto& r : reps) ptrs.push_back(&r);
    SetDiagram wedged = wedge_diagrams(ptrs, C).total;

    std::vector<std::array<int, 3>> merges;
    int wanted = rng.between(0, max_merges);
    for (int i = 0; i < wanted; ++i) {
        int x = nonbase[rng.below(static_cast<int>(nonbase.size()))];
        if (wedged.levels[x] == 0) continue;
        int a = rng.between(0, wedged.levels[x]);  // 0 allowed: punch to the basepoint
        int b = rng.between(1, wedged.levels[x]);
        merges.push_back({x, a, b});
    }
    return quotient_diagram(wedged, merges).diagram;
}

// ---------------------------------------------------------------------------
// Category-valued diagrams.  Values are owned copies; the action is a functor
// table per index morphism.  The basepoint value must be the terminal category.

struct FunctorTable {
    std::vector<int> on_obj;
    std::vector<int> on_mor;

    friend bool operator==(const FunctorTable&, const FunctorTable&) = default;
};

struct CatDiagram {
    const FinCategory* index = nullptr;
    std::vector<FinCategory> values;   // per index object
    std::vector<FunctorTable> action;  // per index morphism
};

inline FunctorTable identity_table(const FinCategory& c) {
    FunctorTable t;
    t.on_obj.resize(c.num_objects());
    t.on_mor.resize(c.num_morphisms());
    for (int i = 0; i < c.num_objects(); ++i) t.on_obj[i] = i;
    for (int i = 0; i < c.num_morphisms(); ++i) t.on_mor[i] = i;
    return t;
}

inline FunctorTable compose_tables(const FunctorTable& g, const FunctorTable& f) {
    FunctorTable h;
    for (int x : f.on_obj) h.on_obj.push_back(g.on_obj[x]);
    for (int m : f.on_mor) h.on_mor.push_back(g.on_mor[m]);
    return h;
}

inline CatReport validate_functor_table(const FunctorTable& t, const FinCategory& A,
                                        const FinCategory& B, const std::string& where) {
    CatReport rep;
    Functor F{&A, &B, t.on_obj, t.on_mor};
    auto sub = validate_functor(F);
    if (!sub.ok) rep.fail("functor table at " + where + ": " + sub.summary());
    return rep;
}

inline CatReport validate_cat_diagram(const CatDiagram& X) {
    CatReport rep;
    const FinCategory& C = *X.index;
    if (static_cast<int>(X.values.size()) != C.num_objects() ||
        static_cast<int>(X.action.size()) != C.num_morphisms()) {
        rep.fail("diagram tables have wrong shape");
        return rep;
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        auto sub = validate_functor_table(X.action[m], X.values[C.mor_src[m]],
                                          X.values[C.mor_dst[m]], C.mor_names[m]);
        if (!sub.ok) rep.fail(sub.summary());
    }
    if (!rep.ok) return rep;
    for (int x = 0; x < C.num_objects(); ++x)
        if (!(X.action[C.identities[x]] == identity_table(X.values[x])))
            rep.fail("identity of " + C.objects[x] + " does not act as the identity");
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g = 0; g < C.num_morphisms(); ++g)
            if (C.composable(g, f) &&
                !(X.action[C.compose(g, f)] == compose_tables(X.action[g], X.action[f]))) {
                rep.fail("functoriality fails at (" + C.mor_names[g] + ", " + C.mor_names[f] + ")");
                return rep;
            }
    if (C.pointed()) {
        const FinCategory& bp = X.values[C.basepoint];
        if (bp.num_objects() != 1 || bp.num_morphisms() != 1)
            rep.fail("basepoint value is not the terminal category");
    }
    return rep;
}

inline CatDiagram precompose(const CatDiagram& X, const Functor& F) {
    if (F.cod != X.index) throw std::invalid_argument("precompose: index mismatch");
    CatDiagram Y{F.dom, {}, {}};
    for (int x : F.on_obj) Y.values.push_back(X.values[x]);
    for (int m : F.on_mor) Y.action.push_back(X.action[m]);
    return Y;
}

}  // namespace fincat
