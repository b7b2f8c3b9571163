#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite categories as explicit tables: a dense list of objects and morphisms,
// hom-sets as ordered id lists, and a full composition table.  Morphism ids are
// stable; every generator in this library assigns them in a deterministic
// enumeration order, so serialized output is reproducible byte for byte.

namespace fincat {

struct FinCategory {
    std::vector<std::string> objects;               // names, index = object id
    std::vector<std::string> mor_names;             // names, index = morphism id
    std::vector<int> mor_src, mor_dst;              // per morphism id
    std::vector<std::vector<std::vector<int>>> hom; // hom[a][b] = morphism ids, in order
    std::vector<int> identities;                    // per object id
    std::vector<std::int32_t> compose_table;        // [g * M + f] = g∘f, -1 if not composable
    int basepoint = -1;                             // object id of the zero object, -1 if none
    std::vector<std::int32_t> zero_mor;             // per a*O+b: the zero morphism a->b (pointed only)

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(mor_names.size()); }
    bool pointed() const { return basepoint >= 0; }

    bool composable(int g, int f) const { return mor_dst[f] == mor_src[g]; }

    int compose(int g, int f) const {
        int r = compose_table[static_cast<size_t>(g) * num_morphisms() + f];
        if (r < 0)
            throw std::invalid_argument("compose: " + mor_names[g] + " ∘ " + mor_names[f] +
                                        " is not composable");
        return r;
    }

    int zero(int a, int b) const {
        if (!pointed()) throw std::logic_error("zero: category has no basepoint");
        return zero_mor[static_cast<size_t>(a) * num_objects() + b];
    }

    bool is_zero_mor(int m) const { return pointed() && m == zero(mor_src[m], mor_dst[m]); }

    // Morphisms of hom(a,b) that do not factor through the basepoint.
    std::vector<int> nonzero_hom(int a, int b) const {
        std::vector<int> out;
        for (int m : hom[a][b])
            if (!pointed() || !is_zero_mor(m)) out.push_back(m);
        return out;
    }
};

// Incremental builder.  Morphism ids are handed out in insertion order, which
// is what makes downstream enumeration deterministic.
class CategoryBuilder {
public:
    int add_object(std::string name) {
        cat_.objects.push_back(std::move(name));
        cat_.hom.resize(cat_.objects.size());
        for (auto& row : cat_.hom) row.resize(cat_.objects.size());
        cat_.identities.resize(cat_.objects.size(), -1);
        return static_cast<int>(cat_.objects.size()) - 1;
    }

    int add_morphism(std::string name, int src, int dst) {
        int id = static_cast<int>(cat_.mor_names.size());
        cat_.mor_names.push_back(std::move(name));
        cat_.mor_src.push_back(src);
        cat_.mor_dst.push_back(dst);
        cat_.hom[src][dst].push_back(id);
        return id;
    }

    void set_identity(int obj, int mor) { cat_.identities[obj] = mor; }
    void set_basepoint(int obj) { cat_.basepoint = obj; }

    // Start recording composites; call after all morphisms exist.
    void begin_compose() {
        size_t m = cat_.mor_names.size();
        cat_.compose_table.assign(m * m, -1);
    }

    void set_compose(int g, int f, int gf) {
        cat_.compose_table[static_cast<size_t>(g) * cat_.mor_names.size() + f] = gf;
    }

    // Fills the zero-morphism table from the basepoint's in/out morphisms.
    // Requires the basepoint to already be initial and terminal.
    void finish_pointed() {
        int n = cat_.num_objects();
        cat_.zero_mor.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int to_bp = cat_.hom[a][cat_.basepoint].at(0);
                int from_bp = cat_.hom[cat_.basepoint][b].at(0);
                cat_.zero_mor[static_cast<size_t>(a) * n + b] = cat_.compose(from_bp, to_bp);
            }
    }

    FinCategory take() { return std::move(cat_); }
    const FinCategory& peek() const { return cat_; }

private:
    FinCategory cat_;
};

// Validation never throws on bad tables; it reports.  Witnesses name the
// offending cells so a failure is actionable.
struct CatReport {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string what) {
        ok = false;
        if (problems.size() < 8) problems.push_back(std::move(what));
    }

    std::string summary() const {
        if (ok) return "ok";
        std::string s;
        for (const auto& p : problems) s += p + "; ";
        return s;
    }
};

inline CatReport validate_category(const FinCategory& c) {
    CatReport rep;
    int O = c.num_objects(), M = c.num_morphisms();

    for (int a = 0; a < O; ++a) {
        int e = c.identities[a];
        if (e < 0 || e >= M || c.mor_src[e] != a || c.mor_dst[e] != a)
            rep.fail("identity of " + c.objects[a] + " missing or ill-typed");
    }
    if (!rep.ok) return rep;
    if (static_cast<size_t>(M) * M != c.compose_table.size()) {
        rep.fail("composition table has wrong shape");
        return rep;
    }

    // totality + typing of composition
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            int gf = c.compose_table[static_cast<size_t>(g) * M + f];
            if (c.composable(g, f)) {
                if (gf < 0) {
                    rep.fail("missing composite " + c.mor_names[g] + " ∘ " + c.mor_names[f]);
                } else if (c.mor_src[gf] != c.mor_src[f] || c.mor_dst[gf] != c.mor_dst[g]) {
                    rep.fail("ill-typed composite " + c.mor_names[g] + " ∘ " + c.mor_names[f]);
                }
            } else if (gf >= 0) {
                rep.fail("composite recorded for non-composable pair (" + c.mor_names[g] + ", " +
                         c.mor_names[f] + ")");
            }
        }
    if (!rep.ok) return rep;

    // unit laws
    for (int f = 0; f < M; ++f) {
        if (c.compose(c.identities[c.mor_dst[f]], f) != f)
            rep.fail("left unit fails at " + c.mor_names[f]);
        if (c.compose(f, c.identities[c.mor_src[f]]) != f)
            rep.fail("right unit fails at " + c.mor_names[f]);
    }

    // associativity over every composable triple
    for (int f = 0; f < M && rep.ok; ++f) {
        int b = c.mor_dst[f];
        for (int cobj = 0; cobj < O && rep.ok; ++cobj)
            for (int g : c.hom[b][cobj]) {
                int gf = c.compose(g, f);
                for (int d = 0; d < O; ++d)
                    for (int h : c.hom[cobj][d]) {
                        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
                            rep.fail("associativity fails at triple (" + c.mor_names[h] + ", " +
                                     c.mor_names[g] + ", " + c.mor_names[f] + ")");
                            if (!rep.ok) break;
                        }
                    }
            }
    }

    if (c.pointed()) {
        for (int x = 0; x < O; ++x) {
            if (c.hom[c.basepoint][x].size() != 1)
                rep.fail("basepoint not initial at " + c.objects[x]);
            if (c.hom[x][c.basepoint].size() != 1)
                rep.fail("basepoint not terminal at " + c.objects[x]);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations, as tables.

struct Functor {
    const FinCategory* dom = nullptr;
    const FinCategory* cod = nullptr;
    std::vector<int> on_obj;
    std::vector<int> on_mor;

    int operator()(int obj) const { return on_obj[obj]; }
    int map_mor(int m) const { return on_mor[m]; }
};

inline Functor identity_functor(const FinCategory& c) {
    Functor f{&c, &c, {}, {}};
    f.on_obj.resize(c.num_objects());
    f.on_mor.resize(c.num_morphisms());
    for (int i = 0; i < c.num_objects(); ++i) f.on_obj[i] = i;
    for (int i = 0; i < c.num_morphisms(); ++i) f.on_mor[i] = i;
    return f;
}

inline Functor compose_functors(const Functor& g, const Functor& f) {
    if (f.cod != g.dom) throw std::invalid_argument("compose_functors: middle category mismatch");
    Functor h{f.dom, g.cod, {}, {}};
    h.on_obj.reserve(f.on_obj.size());
    for (int x : f.on_obj) h.on_obj.push_back(g.on_obj[x]);
    h.on_mor.reserve(f.on_mor.size());
    for (int m : f.on_mor) h.on_mor.push_back(g.on_mor[m]);
    return h;
}

inline CatReport validate_functor(const Functor& F) {
    CatReport rep;
    const FinCategory &A = *F.dom, &B = *F.cod;
    if (static_cast<int>(F.on_obj.size()) != A.num_objects() ||
        static_cast<int>(F.on_mor.size()) != A.num_morphisms()) {
        rep.fail("functor tables have wrong shape");
        return rep;
    }
    for (int m = 0; m < A.num_morphisms(); ++m) {
        int fm = F.on_mor[m];
        if (B.mor_src[fm] != F.on_obj[A.mor_src[m]] || B.mor_dst[fm] != F.on_obj[A.mor_dst[m]])
            rep.fail("functor ill-typed at " + A.mor_names[m]);
    }
    if (!rep.ok) return rep;
    for (int x = 0; x < A.num_objects(); ++x)
        if (F.on_mor[A.identities[x]] != B.identities[F.on_obj[x]])
            rep.fail("functor drops identity of " + A.objects[x]);
    for (int f = 0; f < A.num_morphisms(); ++f)
        for (int g = 0; g < A.num_morphisms(); ++g)
            if (A.composable(g, f) &&
                F.on_mor[A.compose(g, f)] != B.compose(F.on_mor[g], F.on_mor[f])) {
                rep.fail("functor breaks composite " + A.mor_names[g] + " ∘ " + A.mor_names[f]);
                return rep;
            }
    if (A.pointed() && B.pointed() && F.on_obj[A.basepoint] != B.basepoint)
        rep.fail("functor does not preserve the basepoint");
    return rep;
}

// Is F bijective on every hom-set (and injective on objects)?  For the skeletal
// categories used here that is exactly full faithfulness.
inline bool fully_faithful(const Functor& F) {
    const FinCategory &A = *F.dom, &B = *F.cod;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < A.num_objects(); ++b) {
            const auto& source = A.hom[a][b];
            const auto& target = B.hom[F.on_obj[a]][F.on_obj[b]];
            if (source.size() != target.size()) return false;
            std::vector<char> hit(target.size(), 0);
            for (int m : source) {
                int fm = F.on_mor[m];
                bool found = false;
                for (size_t k = 0; k < target.size(); ++k)
                    if (target[k] == fm && !hit[k]) {
                        hit[k] = 1;
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

struct NatTrans {
    const Functor* source = nullptr;
    const Functor* target = nullptr;
    std::vector<int> components;  // per object of the shared domain: morphism id in the codomain
};

inline CatReport check_natural(const NatTrans& t) {
    CatReport rep;
    const Functor &F = *t.source, &G = *t.target;
    if (F.dom != G.dom || F.cod != G.cod) {
        rep.fail("source/target functors not parallel");
        return rep;
    }
    const FinCategory &A = *F.dom, &B = *F.cod;
    if (static_cast<int>(t.components.size()) != A.num_objects()) {
        rep.fail("component missing for some object");
        return rep;
    }
    for (int x = 0; x < A.num_objects(); ++x) {
        int c = t.components[x];
        if (B.mor_src[c] != F.on_obj[x] || B.mor_dst[c] != G.on_obj[x])
            rep.fail("component at " + A.objects[x] + " ill-typed");
    }
    if (!rep.ok) return rep;
    for (int m = 0; m < A.num_morphisms(); ++m) {
        int a = A.mor_src[m], b = A.mor_dst[m];
        if (B.compose(t.components[b], F.on_mor[m]) != B.compose(G.on_mor[m], t.components[a]))
            rep.fail("naturality square fails at " + A.mor_names[m]);
    }
    return rep;
}

// Whiskering H·t for H out of the shared codomain: components H(t_x).
inline std::vector<int> whisker_left(const Functor& H, const NatTrans& t) {
    std::vector<int> comps;
    comps.reserve(t.components.size());
    for (int c : t.components) comps.push_back(H.on_mor[c]);
    return comps;
}

inline bool is_iso(const FinCategory& c, int m) {
    int a = c.mor_src[m], b = c.mor_dst[m];
    for (int g : c.hom[b][a])
        if (c.compose(g, m) == c.identities[a] && c.compose(m, g) == c.identities[b]) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Tiny stock categories used as fixtures.

inline FinCategory walking_arrow() {
    CategoryBuilder b;
    int x0 = b.add_object("x0"), x1 = b.add_object("x1");
    int i0 = b.add_morphism("id_x0", x0, x0);
    int i1 = b.add_morphism("id_x1", x1, x1);
    int a = b.add_morphism("a", x0, x1);
    b.set_identity(x0, i0);
    b.set_identity(x1, i1);
    b.begin_compose();
    b.set_compose(i0, i0, i0);
    b.set_compose(i1, i1, i1);
    b.set_compose(a, i0, a);
    b.set_compose(i1, a, a);
    return b.take();
}

inline FinCategory walking_iso() {
    CategoryBuilder b;
    int x0 = b.add_object("x0"), x1 = b.add_object("x1");
    int i0 = b.add_morphism("id_x0", x0, x0);
    int i1 = b.add_morphism("id_x1", x1, x1);
    int u = b.add_morphism("u", x0, x1);
    int v = b.add_morphism("v", x1, x0);
    b.set_identity(x0, i0);
    b.set_identity(x1, i1);
    b.begin_compose();
    b.set_compose(i0, i0, i0);
    b.set_compose(i1, i1, i1);
    b.set_compose(u, i0, u);
    b.set_compose(i1, u, u);
    b.set_compose(v, i1, v);
    b.set_compose(i0, v, v);
    b.set_compose(v, u, i0);
    b.set_compose(u, v, i1);
    return b.take();
}

// The poset 0 < 1 < ... < n as a category.
inline FinCategory chain_category(int n) {
    CategoryBuilder b;
    for (int i = 0; i <= n; ++i) b.add_object("c" + std::to_string(i));
    std::vector<std::vector<int>> arrow(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            arrow[i][j] = b.add_morphism("c" + std::to_string(i) + "<=" + std::to_string(j), i, j);
    for (int i = 0; i <= n; ++i) b.set_identity(i, arrow[i][i]);
    b.begin_compose();
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) b.set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
    return b.take();
}

inline FinCategory terminal_category() {
    CategoryBuilder b;
    int x = b.add_object("pt");
    int i = b.add_morphism("id_pt", x, x);
    b.set_identity(x, i);
    b.begin_compose();
    b.set_compose(i, i, i);
    return b.take();
}

}  // namespace fincat
