#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/nerve.hpp"

// Relative categories (a finite category with a marked wide subcategory), the
// simplex categories of marked ladders between composable strings, and the
// resulting bisimplicial classification levels with their Segal maps.

namespace fincat {

struct RelativeCategory {
    const FinCategory* cat = nullptr;
    std::vector<char> weq;  // per morphism id

    bool marked(int m) const { return weq[m] != 0; }
};

inline std::vector<char> weq_all(const FinCategory& c) {
    return std::vector<char>(c.num_morphisms(), 1);
}

inline std::vector<char> weq_identities(const FinCategory& c) {
    std::vector<char> w(c.num_morphisms(), 0);
    for (int x = 0; x < c.num_objects(); ++x) w[c.identities[x]] = 1;
    return w;
}

inline std::vector<char> weq_isos(const FinCategory& c) {
    std::vector<char> w(c.num_morphisms(), 0);
    for (int m = 0; m < c.num_morphisms(); ++m) w[m] = is_iso(c, m) ? 1 : 0;
    return w;
}

inline CatReport validate_relative(const RelativeCategory& R) {
    CatReport rep;
    const FinCategory& C = *R.cat;
    if (static_cast<int>(R.weq.size()) != C.num_morphisms()) {
        rep.fail("marking has wrong shape");
        return rep;
    }
    for (int x = 0; x < C.num_objects(); ++x)
        if (!R.marked(C.identities[x]))
            rep.fail("identity of " + C.objects[x] + " is not marked");
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g = 0; g < C.num_morphisms(); ++g)
            if (C.composable(g, f) && R.marked(f) && R.marked(g) &&
                !R.marked(C.compose(g, f))) {
                rep.fail("marked arrows compose out of the marking at (" + C.mor_names[g] + ", " +
                         C.mor_names[f] + ")");
                return rep;
            }
    return rep;
}

inline bool weq_contains_isos(const RelativeCategory& R) {
    for (int m = 0; m < R.cat->num_morphisms(); ++m)
        if (is_iso(*R.cat, m) && !R.marked(m)) return false;
    return true;
}

inline bool weq_two_out_of_three(const RelativeCategory& R) {
    const FinCategory& C = *R.cat;
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g = 0; g < C.num_morphisms(); ++g) {
            if (!C.composable(g, f)) continue;
            int gf = C.compose(g, f);
            int have = (R.marked(f) ? 1 : 0) + (R.marked(g) ? 1 : 0) + (R.marked(gf) ? 1 : 0);
            if (have == 2) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// The simplex category at width n: objects are composable n-strings, morphisms
// are ladders with every rung marked and all squares commuting; composition is
// rungwise.  n = 0 recovers the marked subcategory itself.

struct RelSimplexCat {
    FinCategory cat;
    std::vector<Simplex> objs;              // per object id: the n-string
    std::vector<std::vector<int>> ladders;  // per morphism id: n+1 rungs
    std::map<Simplex, int> obj_index;
    std::map<std::vector<int>, int> mor_index;  // key: [src, dst, rungs...]

    int object_id(const Simplex& s) const { return obj_index.at(s); }

    int ladder_id(int src, int dst, const std::vector<int>& rungs) const {
        std::vector<int> key{src, dst};
        key.insert(key.end(), rungs.begin(), rungs.end());
        return mor_index.at(key);
    }
};

inline RelSimplexCat relative_simplex_category(const RelativeCategory& R, int n) {
    const FinCategory& C = *R.cat;
    RelSimplexCat out;
    CategoryBuilder b;
    for (const auto& s : nerve_level(C, n)) {
        std::string name = C.objects[s.base];
        for (int m : s.arrows) name += "|" + C.mor_names[m];
        int id = b.add_object("[" + name + "]");
        out.objs.push_back(s);
        out.obj_index[s] = id;
    }

    // marked arrows grouped by source, for the rung backtracking
    std::vector<std::vector<int>> marked_from(C.num_objects());
    for (int m = 0; m < C.num_morphisms(); ++m)
        if (R.marked(m)) marked_from[C.mor_src[m]].push_back(m);

    int O = static_cast<int>(out.objs.size());
    for (int a = 0; a < O; ++a)
        for (int c = 0; c < O; ++c) {
            const Simplex &s = out.objs[a], &t = out.objs[c];
            std::vector<int> rungs(n + 1, -1);
            auto rec = [&](auto&& self, int i) -> void {
                if (i > n) {
                    std::string name = "w(" + b.peek().objects[a] + "=>" + b.peek().objects[c] + ":";
                    for (int r = 0; r <= n; ++r) name += (r ? "," : "") + C.mor_names[rungs[r]];
                    int id = b.add_morphism(name + ")", a, c);
                    out.ladders.push_back(rungs);
                    std::vector<int> key{a, c};
                    key.insert(key.end(), rungs.begin(), rungs.end());
                    out.mor_index[key] = id;
                    return;
                }
                for (int w : marked_from[simplex_vertex(C, s, i)]) {
                    if (C.mor_dst[w] != simplex_vertex(C, t, i)) continue;
                    // square between rungs i-1 and i must commute
                    if (i > 0 && C.compose(t.arrows[i - 1], rungs[i - 1]) !=
                                     C.compose(w, s.arrows[i - 1]))
                        continue;
                    rungs[i] = w;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }

    for (int a = 0; a < O; ++a) {
        std::vector<int> rungs;
        for (int i = 0; i <= n; ++i) rungs.push_back(C.identities[simplex_vertex(C, out.objs[a], i)]);
        b.set_identity(a, out.ladder_id(a, a, rungs));
    }
    int M = static_cast<int>(out.ladders.size());
    b.begin_compose();
    const FinCategory& peek = b.peek();
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            if (peek.mor_dst[f] != peek.mor_src[g]) continue;
            std::vector<int> rungs;
            for (int i = 0; i <= n; ++i) rungs.push_back(C.compose(out.ladders[g][i], out.ladders[f][i]));
            b.set_compose(g, f, out.ladder_id(peek.mor_src[f], peek.mor_dst[g], rungs));
        }
    out.cat = b.take();
    return out;
}

// ---------------------------------------------------------------------------
// The classification diagram, one width at a time: level (n,k) is the set of
// k-simplices of the nerve of the width-n simplex category.  Horizontal
// (width-direction) faces and degeneracies are functors between the simplex
// categories; vertical ones are the nerve operators.

class ClassificationDiagram {
public:
    ClassificationDiagram(const RelativeCategory& R, int n_max) : R_(&R), n_max_(n_max) {
        for (int n = 0; n <= n_max; ++n) widths_.push_back(relative_simplex_category(R, n));
        for (int n = 1; n <= n_max; ++n) {
            hface_.emplace_back();
            for (int i = 0; i <= n; ++i) hface_.back().push_back(make_hface(n, i));
        }
        for (int n = 0; n < n_max; ++n) {
            hdeg_.emplace_back();
            for (int i = 0; i <= n; ++i) hdeg_.back().push_back(make_hdeg(n, i));
        }
    }

    const RelSimplexCat& width(int n) const { return widths_[n]; }
    int max_width() const { return n_max_; }

    const std::vector<Simplex>& level(int n, int k) const {
        auto key = std::make_pair(n, k);
        auto it = levels_.find(key);
        if (it == levels_.end())
            it = levels_.emplace(key, nerve_level(widths_[n].cat, k)).first;
        return it->second;
    }

    long long level_count(int n, int k) const { return static_cast<long long>(level(n, k).size()); }

    // horizontal operators as functor tables (hface(n,i): width n -> n-1)
    const FunctorTable& hface(int n, int i) const { return hface_[n - 1][i]; }
    const FunctorTable& hdeg(int n, int i) const { return hdeg_[n][i]; }

    int level_index(int n, int k, const Simplex& s) const {
        auto key = std::make_pair(n, k);
        auto it = level_index_.find(key);
        if (it == level_index_.end()) {
            std::map<Simplex, int> idx;
            const auto& lv = level(n, k);
            for (size_t e = 0; e < lv.size(); ++e) idx[lv[e]] = static_cast<int>(e);
            it = level_index_.emplace(key, std::move(idx)).first;
        }
        return it->second.at(s);
    }

private:
    FunctorTable make_hface(int n, int i) const {
        const RelSimplexCat &src = widths_[n], &dst = widths_[n - 1];
        const FinCategory& C = *R_->cat;
        FunctorTable F;
        for (const auto& s : src.objs) F.on_obj.push_back(dst.object_id(face(C, s, i)));
        for (int m = 0; m < src.cat.num_morphisms(); ++m) {
            std::vector<int> rungs = src.ladders[m];
            rungs.erase(rungs.begin() + i);
            F.on_mor.push_back(dst.ladder_id(F.on_obj[src.cat.mor_src[m]],
                                             F.on_obj[src.cat.mor_dst[m]], rungs));
        }
        return F;
    }

    FunctorTable make_hdeg(int n, int i) const {
        const RelSimplexCat &src = widths_[n], &dst = widths_[n + 1];
        const FinCategory& C = *R_->cat;
        FunctorTable F;
        for (const auto& s : src.objs) F.on_obj.push_back(dst.object_id(degeneracy(C, s, i)));
        for (int m = 0; m < src.cat.num_morphisms(); ++m) {
            std::vector<int> rungs = src.ladders[m];
            rungs.insert(rungs.begin() + i, rungs[i]);
            F.on_mor.push_back(dst.ladder_id(F.on_obj[src.cat.mor_src[m]],
                                             F.on_obj[src.cat.mor_dst[m]], rungs));
        }
        return F;
    }

    const RelativeCategory* R_;
    int n_max_;
    std::vector<RelSimplexCat> widths_;
    std::vector<std::vector<FunctorTable>> hface_;  // hface_[n-1][i]
    std::vector<std::vector<FunctorTable>> hdeg_;   // hdeg_[n][i]
    mutable std::map<std::pair<int, int>, std::vector<Simplex>> levels_;
    mutable std::map<std::pair<int, int>, std::map<Simplex, int>> level_index_;
};

// Both directions of simplicial identities, plus their commutation, on every
// stored simplex with n, k within the given range.
inline CatReport check_bisimplicial_identities(const ClassificationDiagram& CD, int n_max,
                                               int k_max) {
    CatReport rep;
    for (int n = 0; n <= n_max; ++n) {
        auto sub = check_simplicial_identities(CD.width(n).cat, k_max);
        if (!sub.ok) rep.fail("vertical identities fail at width " + std::to_string(n));
    }
    // horizontal identities, as table equalities
    auto tcomp = [&](const FunctorTable& g, const FunctorTable& f) { return compose_tables(g, f); };
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(tcomp(CD.hface(n - 1, i), CD.hface(n, j)) ==
                      tcomp(CD.hface(n - 1, j - 1), CD.hface(n, i))))
                    rep.fail("horizontal d_i d_j fails at width " + std::to_string(n));
    for (int n = 0; n + 1 < n_max; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (!(tcomp(CD.hdeg(n + 1, i), CD.hdeg(n, j)) ==
                      tcomp(CD.hdeg(n + 1, j + 1), CD.hdeg(n, i))))
                    rep.fail("horizontal s_i s_j fails at width " + std::to_string(n));
    for (int n = 0; n < n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                FunctorTable got = tcomp(CD.hface(n + 1, i), CD.hdeg(n, j));
                bool ok;
                if (i == j || i == j + 1) {
                    ok = got == identity_table(CD.width(n).cat);
                } else if (i < j) {
                    ok = got == tcomp(CD.hdeg(n - 1, j - 1), CD.hface(n, i));
                } else {  // i > j + 1
                    ok = got == tcomp(CD.hdeg(n - 1, j), CD.hface(n, i - 1));
                }
                if (!ok)
                    rep.fail("horizontal d_" + std::to_string(i) + " s_" + std::to_string(j) +
                             " fails at width " + std::to_string(n));
            }
    // cross-commutation: horizontal tables are functors, so they commute with
    // the vertical operators; verified on the stored simplices anyway.
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 1; k <= k_max; ++k)
                for (const auto& s : CD.level(n, k))
                    for (int j = 0; j <= k; ++j)
                        if (!(map_simplex(CD.hface(n, i), face(CD.width(n).cat, s, j)) ==
                              face(CD.width(n - 1).cat, map_simplex(CD.hface(n, i), s), j))) {
                            rep.fail("horizontal/vertical commutation fails at (" +
                                     std::to_string(n) + "," + std::to_string(k) + ")");
                            return rep;
                        }
    return rep;
}

// ---------------------------------------------------------------------------
// Segal maps in the width direction at a fixed vertical degree.

struct SegalReport {
    bool bijective = true;
    long long source_size = 0, target_size = 0;
    std::string witness;
};

// A truncated simplicial set by index tables; face[m][i] maps degree m to m-1.
struct SimplicialLevels {
    std::vector<int> sizes;
    std::vector<std::vector<std::vector<int>>> face;
};

// Restrict a top-degree element to its j-th spine edge (j = 1..n) by dropping
// trailing then leading vertices.
inline int spine_edge(const SimplicialLevels& S, int n, int e, int j) {
    int cur = e;
    for (int m = n; m > j; --m) cur = S.face[m][m][cur];  // drop vertices n .. j+1
    for (int m = j; m >= 2; --m) cur = S.face[m][0][cur]; // drop vertices 0 .. j-2
    return cur;
}

inline SegalReport segal_check(const SimplicialLevels& S, int n) {
    SegalReport rep;
    rep.source_size = S.sizes[n];
    if (n < 2) {  // spine map is the identity / an edge; always bijective
        rep.target_size = rep.source_size;
        return rep;
    }
    // spines of the top level
    std::set<std::vector<int>> spines;
    bool injective = true;
    for (int e = 0; e < S.sizes[n]; ++e) {
        std::vector<int> sp;
        for (int j = 1; j <= n; ++j) sp.push_back(spine_edge(S, n, e, j));
        if (!spines.insert(sp).second) injective = false;
    }
    // all compatible chains of edges: left endpoint = face[1][1], right = face[1][0]
    std::vector<std::vector<int>> by_left(S.sizes[0]);
    for (int e = 0; e < S.sizes[1]; ++e) by_left[S.face[1][1][e]].push_back(e);
    long long chains = 0;
    std::vector<int> chain(n);
    bool all_hit = true;
    std::vector<int> missing;
    auto rec = [&](auto&& self, int j, int vertex) -> void {
        if (j == n) {
            ++chains;
            if (!spines.count(chain) && all_hit) {
                all_hit = false;
                missing = chain;
            }
            return;
        }
        if (j == 0) {
            for (int e = 0; e < S.sizes[1]; ++e) {
                chain[0] = e;
                self(self, 1, S.face[1][0][e]);
            }
        } else {
            for (int e : by_left[vertex]) {
                chain[j] = e;
                self(self, j + 1, S.face[1][0][e]);
            }
        }
    };
    rec(rec, 0, -1);
    rep.target_size = chains;
    if (!injective) {
        rep.bijective = false;
        rep.witness = "spine map is not injective";
    } else if (chains != rep.source_size || !all_hit) {
        rep.bijective = false;
        rep.witness = "spine map is not surjective (target has " + std::to_string(chains) +
                      " chains, source has " + std::to_string(rep.source_size) + ")";
        if (!all_hit) {
            rep.witness += "; first unhit chain: (";
            for (size_t j = 0; j < missing.size(); ++j)
                rep.witness += (j ? "," : "") + std::to_string(missing[j]);
            rep.witness += ")";
        }
    }
    return rep;
}

// The width-direction levels of a classification diagram at vertical degree k.
inline SimplicialLevels width_levels(const ClassificationDiagram& CD, int n_max, int k) {
    SimplicialLevels S;
    S.face.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) S.sizes.push_back(static_cast<int>(CD.level(n, k).size()));
    for (int n = 1; n <= n_max; ++n) {
        S.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            auto& tbl = S.face[n][i];
            for (const auto& s : CD.level(n, k))
                tbl.push_back(CD.level_index(n - 1, k, map_simplex(CD.hface(n, i), s)));
        }
    }
    return S;
}

inline SegalReport segal_check(const ClassificationDiagram& CD, int n, int k) {
    return segal_check(width_levels(CD, n, k), n);
}

// ---------------------------------------------------------------------------
// The prism decomposition: a natural transformation p: F => G of functors
// A -> B induces a simplicial homotopy N(A) x Delta[1] -> N(B).  An element of
// the product in degree k is (sigma, j) with j in 0..k+1 the number of leading
// vertices still mapped by F.

struct PrismReport {
    bool ok = true;
    bool constant = true;  // true when H(sigma, j) is independent of j
    std::string witness;
};

inline FunctorTable table_of(const Functor& F) { return FunctorTable{F.on_obj, F.on_mor}; }

inline Simplex prism_simplex(const NatTrans& p, const Simplex& sigma, int j) {
    const Functor &F = *p.source, &G = *p.target;
    const FinCategory &A = *F.dom, &B = *F.cod;
    Simplex out;
    out.base = j > 0 ? F.on_obj[sigma.base] : G.on_obj[sigma.base];
    int k = sigma.degree();
    for (int i = 1; i <= k; ++i) {
        int f = sigma.arrows[i - 1];
        if (i <= j - 1) {
            out.arrows.push_back(F.on_mor[f]);
        } else if (i >= j + 1) {
            out.arrows.push_back(G.on_mor[f]);
        } else {  // the switch arrow: G(f) ∘ p at the source vertex
            out.arrows.push_back(B.compose(G.on_mor[f], p.components[A.mor_src[f]]));
        }
    }
    return out;
}

inline PrismReport check_prism_homotopy(const NatTrans& p, int degree) {
    PrismReport rep;
    auto nat = check_natural(p);
    if (!nat.ok) throw std::invalid_argument("check_prism_homotopy: not natural: " + nat.summary());
    const Functor &F = *p.source, &G = *p.target;
    const FinCategory &A = *F.dom, &B = *F.cod;
    FunctorTable Ft = table_of(F), Gt = table_of(G);

    for (int k = 0; k <= degree && rep.ok; ++k)
        for (const auto& sigma : nerve_level(A, k)) {
            // ends of the cylinder
            if (!(prism_simplex(p, sigma, k + 1) == map_simplex(Ft, sigma)) ||
                !(prism_simplex(p, sigma, 0) == map_simplex(Gt, sigma))) {
                rep.ok = false;
                rep.witness = "cylinder ends wrong in degree " + std::to_string(k);
                break;
            }
            for (int j = 0; j <= k + 1; ++j) {
                Simplex h = prism_simplex(p, sigma, j);
                if (!(h == prism_simplex(p, sigma, 0))) rep.constant = false;
                // compatibility with faces and degeneracies of the product
                for (int i = 0; i <= k && k > 0; ++i) {
                    int j2 = i < j ? j - 1 : j;
                    if (!(prism_simplex(p, face(A, sigma, i), j2) == face(B, h, i))) {
                        rep.ok = false;
                        rep.witness = "prism face identity fails in degree " + std::to_string(k);
                    }
                }
                for (int i = 0; i <= k && k < degree; ++i) {
                    int j2 = i < j ? j + 1 : j;
                    if (!(prism_simplex(p, degeneracy(A, sigma, i), j2) == degeneracy(B, h, i))) {
                        rep.ok = false;
                        rep.witness = "prism degeneracy identity fails in degree " +
                                      std::to_string(k);
                    }
                }
            }
            if (!rep.ok) break;
        }
    return rep;
}

}  // namespace fincat
