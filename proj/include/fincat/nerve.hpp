#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/diagram.hpp"

// Nerves of finite categories, kept as explicit simplex tables up to a fixed
// degree.  Degenerate simplices are stored like any other (identities are just
// arrows), so the face/degeneracy calculus is uniform.

namespace fincat {

// A k-simplex of the nerve: base object plus k composable arrows
// x_0 -f1-> x_1 -> ... -fk-> x_k.  For k = 0, arrows is empty.
struct Simplex {
    int base = 0;
    std::vector<int> arrows;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

    int degree() const { return static_cast<int>(arrows.size()); }
};

inline int simplex_end(const FinCategory& C, const Simplex& s) {
    return s.arrows.empty() ? s.base : C.mor_dst[s.arrows.back()];
}

inline int simplex_vertex(const FinCategory& C, const Simplex& s, int i) {
    return i == 0 ? s.base : C.mor_dst[s.arrows[i - 1]];
}

// Enumerate all k-simplices by extending strings with every composable arrow,
// in hom-list order; deterministic and lexicographic in (base, arrow ids).
inline std::vector<Simplex> nerve_level(const FinCategory& C, int k) {
    std::vector<Simplex> cur;
    for (int x = 0; x < C.num_objects(); ++x) cur.push_back(Simplex{x, {}});
    for (int step = 0; step < k; ++step) {
        std::vector<Simplex> next;
        for (const auto& s : cur) {
            int end = simplex_end(C, s);
            for (int b = 0; b < C.num_objects(); ++b)
                for (int m : C.hom[end][b]) {
                    Simplex t = s;
                    t.arrows.push_back(m);
                    next.push_back(std::move(t));
                }
        }
        cur = std::move(next);
    }
    return cur;
}

inline Simplex face(const FinCategory& C, const Simplex& s, int i) {
    int k = s.degree();
    if (i < 0 || i > k || k == 0) throw std::invalid_argument("face: index out of range");
    Simplex t;
    if (i == 0) {
        t.base = simplex_vertex(C, s, 1);
        t.arrows.assign(s.arrows.begin() + 1, s.arrows.end());
    } else if (i == k) {
        t.base = s.base;
        t.arrows.assign(s.arrows.begin(), s.arrows.end() - 1);
    } else {
        t.base = s.base;
        t.arrows.assign(s.arrows.begin(), s.arrows.begin() + (i - 1));
        t.arrows.push_back(C.compose(s.arrows[i], s.arrows[i - 1]));
        t.arrows.insert(t.arrows.end(), s.arrows.begin() + (i + 1), s.arrows.end());
    }
    return t;
}

inline Simplex degeneracy(const FinCategory& C, const Simplex& s, int i) {
    int k = s.degree();
    if (i < 0 || i > k) throw std::invalid_argument("degeneracy: index out of range");
    Simplex t{s.base, {}};
    t.arrows.assign(s.arrows.begin(), s.arrows.begin() + i);
    t.arrows.push_back(C.identities[simplex_vertex(C, s, i)]);
    t.arrows.insert(t.arrows.end(), s.arrows.begin() + i, s.arrows.end());
    return t;
}

// Apply a functor table to a simplex (the nerve is functorial).
inline Simplex map_simplex(const FunctorTable& F, const Simplex& s) {
    Simplex t{F.on_obj[s.base], {}};
    t.arrows.reserve(s.arrows.size());
    for (int m : s.arrows) t.arrows.push_back(F.on_mor[m]);
    return t;
}

// Check the simplicial identities on every stored simplex of degree <= d.
inline CatReport check_simplicial_identities(const FinCategory& C, int d) {
    CatReport rep;
    for (int k = 0; k <= d; ++k)
        for (const auto& s : nerve_level(C, k)) {
            if (k >= 2)
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j <= k; ++j)
                        if (!(face(C, face(C, s, j), i) == face(C, face(C, s, i), j - 1)))
                            rep.fail("d_i d_j fails at degree " + std::to_string(k));
            for (int i = 0; i <= k; ++i)
                for (int j = i; j <= k; ++j)
                    if (!(degeneracy(C, degeneracy(C, s, j), i) ==
                          degeneracy(C, degeneracy(C, s, i), j + 1)))
                        rep.fail("s_i s_j fails at degree " + std::to_string(k));
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i) {
                    Simplex sj = degeneracy(C, s, j);
                    Simplex got = face(C, sj, i);
                    Simplex want = i < j    ? degeneracy(C, face(C, s, i), j - 1)
                                   : i > j + 1 ? degeneracy(C, face(C, s, i - 1), j)
                                               : s;
                    if (!(got == want)) rep.fail("d_i s_j fails at degree " + std::to_string(k));
                }
            if (!rep.ok) return rep;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Levelwise nerve of a category-valued diagram: a table of simplex sets
// indexed by (index object, degree), with the index action mapping simplices
// and the simplicial operators acting within each index level.

struct NerveDiagram {
    const CatDiagram* source = nullptr;
    int degree = 0;
    // levels[c][k]: the k-simplices of the nerve of values[c]
    std::vector<std::vector<std::vector<Simplex>>> levels;
};

inline NerveDiagram nerve_levelwise(const CatDiagram& X, int degree) {
    NerveDiagram N{&X, degree, {}};
    const FinCategory& C = *X.index;
    N.levels.resize(C.num_objects());
    for (int c = 0; c < C.num_objects(); ++c) {
        N.levels[c].resize(degree + 1);
        for (int k = 0; k <= degree; ++k) N.levels[c][k] = nerve_level(X.values[c], k);
    }
    return N;
}

inline CatReport validate_nerve(const NerveDiagram& N) {
    CatReport rep;
    const CatDiagram& X = *N.source;
    const FinCategory& C = *X.index;
    for (int c = 0; c < C.num_objects(); ++c) {
        auto sub = check_simplicial_identities(X.values[c], N.degree);
        if (!sub.ok) rep.fail("at " + C.objects[c] + ": " + sub.summary());
    }
    // index action commutes with faces and degeneracies (levelwise simplicial map)
    for (int m = 0; m < C.num_morphisms() && rep.ok; ++m) {
        int a = C.mor_src[m], b = C.mor_dst[m];
        for (int k = 0; k <= N.degree; ++k)
            for (const auto& s : N.levels[a][k]) {
                for (int i = 0; i <= k && k > 0; ++i)
                    if (!(map_simplex(X.action[m], face(X.values[a], s, i)) ==
                          face(X.values[b], map_simplex(X.action[m], s), i)))
                        rep.fail("action at " + C.mor_names[m] + " fails to commute with d_" +
                                 std::to_string(i));
                if (k < N.degree)
                    for (int i = 0; i <= k; ++i)
                        if (!(map_simplex(X.action[m], degeneracy(X.values[a], s, i)) ==
                              degeneracy(X.values[b], map_simplex(X.action[m], s), i)))
                            rep.fail("action at " + C.mor_names[m] +
                                     " fails to commute with s_" + std::to_string(i));
            }
    }
    if (C.pointed())
        for (int k = 0; k <= N.degree; ++k)
            if (N.levels[C.basepoint][k].size() != 1)
                rep.fail("basepoint level is not a point in degree " + std::to_string(k));
    return rep;
}

}  // namespace fincat
