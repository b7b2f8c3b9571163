#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/pointed_set.hpp"

// The truncated skeletal category of pointed finite sets, the injection
// category that reindexes tuples, and the smash-product bookkeeping on both.

namespace fincat {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All pointed maps <n> -> <m> in lexicographic order of their value tables
// (first entry most significant).  The zero map comes first; with nonzero_only
// it is dropped, leaving (m+1)^n - 1 maps for n >= 1 and none for n = 0 or m = 0.
inline std::vector<PointedMap> enum_pointed_maps(int n, int m, bool nonzero_only = false) {
    std::vector<PointedMap> out;
    PointedMap f{n, m, std::vector<int>(n, 0)};
    while (true) {
        if (!(nonzero_only && f.is_zero())) out.push_back(f);
        int k = n - 1;
        while (k >= 0 && f.values[k] == m) f.values[k--] = 0;
        if (k < 0) break;
        ++f.values[k];
    }
    return out;
}

// Lexicographic rank of a map among all (m+1)^n maps <n> -> <m>.
inline long long pointed_map_rank(const PointedMap& f) {
    long long r = 0;
    for (int v : f.values) r = r * (f.cod + 1) + v;
    return r;
}

// ---------------------------------------------------------------------------
// The pointed-sets truncation as an explicit category.  Object id n is <n>;
// morphism ids are contiguous per hom-set in lex order, so id lookup is a rank
// computation rather than a search.

struct SkelCat {
    int max_size = 0;
    FinCategory cat;
    std::vector<PointedMap> maps;            // per morphism id
    std::vector<std::vector<int>> hom_base;  // hom_base[n][m] = first id of hom(<n>,<m>)

    int id_of(const PointedMap& f) const {
        if (f.dom > max_size || f.cod > max_size)
            throw TruncationError("pointed map " + show(f) + " exceeds truncation N=" +
                                  std::to_string(max_size));
        return hom_base[f.dom][f.cod] + static_cast<int>(pointed_map_rank(f));
    }
};

inline SkelCat make_skel_cat(int max_size) {
    SkelCat s;
    s.max_size = max_size;
    CategoryBuilder b;
    for (int n = 0; n <= max_size; ++n) b.add_object(show(PointedSet{n}));
    s.hom_base.assign(max_size + 1, std::vector<int>(max_size + 1, -1));
    for (int n = 0; n <= max_size; ++n)
        for (int m = 0; m <= max_size; ++m) {
            auto fs = enum_pointed_maps(n, m);
            s.hom_base[n][m] = static_cast<int>(s.maps.size());
            for (auto& f : fs) {
                b.add_morphism(show(f), n, m);
                s.maps.push_back(std::move(f));
            }
        }
    for (int n = 0; n <= max_size; ++n)
        b.set_identity(n, s.hom_base[n][n] + static_cast<int>(pointed_map_rank(identity_map(n))));
    b.set_basepoint(0);
    b.begin_compose();
    int M = static_cast<int>(s.maps.size());
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g)
            if (s.maps[f].cod == s.maps[g].dom) {
                PointedMap gf = compose(s.maps[g], s.maps[f]);
                b.set_compose(g, f, s.hom_base[gf.dom][gf.cod] +
                                        static_cast<int>(pointed_map_rank(gf)));
            }
    b.finish_pointed();
    s.cat = b.take();
    return s;
}

// The evident inclusion of a smaller truncation into a larger one.
inline Functor skel_inclusion(const SkelCat& small, const SkelCat& big) {
    if (big.max_size < small.max_size)
        throw std::invalid_argument("skel_inclusion: target truncation is smaller");
    Functor F{&small.cat, &big.cat, {}, {}};
    for (int n = 0; n <= small.max_size; ++n) F.on_obj.push_back(n);
    for (const auto& f : small.maps) F.on_mor.push_back(big.id_of(f));
    return F;
}

// ---------------------------------------------------------------------------
// Injections {1..q} >-> {1..p}; the empty set is q = 0.  Not assumed monotone.

struct Injection {
    int q = 0, p = 0;
    std::vector<int> images;  // images[i-1] = f(i), pairwise distinct, in 1..p

    friend bool operator==(const Injection&, const Injection&) = default;

    bool well_formed() const {
        if (q < 0 || p < 0 || q > p || static_cast<int>(images.size()) != q) return false;
        std::vector<char> seen(p + 1, 0);
        for (int v : images) {
            if (v < 1 || v > p || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    int apply(int i) const { return images[i - 1]; }

    // preimage of j, or 0 if j is not hit
    int preimage(int j) const {
        for (int i = 1; i <= q; ++i)
            if (images[i - 1] == j) return i;
        return 0;
    }
};

inline Injection identity_injection(int q) {
    Injection f{q, q, std::vector<int>(q)};
    std::iota(f.images.begin(), f.images.end(), 1);
    return f;
}

inline Injection compose_injections(const Injection& g, const Injection& f) {
    if (f.p != g.q) throw std::invalid_argument("compose_injections: shape mismatch");
    Injection h{f.q, g.p, {}};
    h.images.reserve(f.q);
    for (int v : f.images) h.images.push_back(g.apply(v));
    return h;
}

// Block sum: f on the first q1 slots, g shifted past p1.
inline Injection block_sum(const Injection& f, const Injection& g) {
    Injection h{f.q + g.q, f.p + g.p, f.images};
    for (int v : g.images) h.images.push_back(f.p + v);
    return h;
}

// All injections {1..q} >-> {1..p}, ordered lexicographically by image tuple.
inline std::vector<Injection> enum_injections(int q, int p) {
    std::vector<Injection> out;
    if (q > p) return out;  // empty hom-set
    Injection f{q, p, std::vector<int>(q)};
    std::vector<char> used(p + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > q) {
            out.push_back(f);
            return;
        }
        for (int v = 1; v <= p; ++v)
            if (!used[v]) {
                used[v] = 1;
                f.images[i - 1] = v;
                self(self, i + 1);
                used[v] = 0;
            }
    };
    rec(rec, 1);
    return out;
}

inline std::string show(const Injection& f) {
    std::string s = "inj" + std::to_string(f.q) + ">" + std::to_string(f.p) + "[";
    for (size_t i = 0; i < f.images.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.images[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Object tuples.  Entries are object ids of some base category; the basepoint
// symbol absorbs any tuple with a zero entry.

struct ObjectTuple {
    bool is_basepoint = false;
    std::vector<int> entries;

    friend bool operator==(const ObjectTuple&, const ObjectTuple&) = default;

    int length() const { return static_cast<int>(entries.size()); }
};

inline ObjectTuple basepoint_tuple() { return ObjectTuple{true, {}}; }

// Collapse to the basepoint symbol if any entry equals the base zero object.
inline ObjectTuple normalize_tuple(ObjectTuple t, int zero_obj) {
    if (!t.is_basepoint)
        for (int e : t.entries)
            if (e == zero_obj) return basepoint_tuple();
    return t;
}

inline std::string show_tuple(const ObjectTuple& t, const FinCategory& base) {
    if (t.is_basepoint) return "*";
    std::string s = "(";
    for (size_t i = 0; i < t.entries.size(); ++i) {
        if (i) s += ",";
        s += base.objects[t.entries[i]];
    }
    return s + ")";
}

// Reindex a q-tuple along f in Inj(q,p): slot j takes the entry over f^{-1}(j),
// and slots outside the image are filled with the designated unit object.
inline ObjectTuple reindex(const Injection& f, const ObjectTuple& t, int unit_obj) {
    if (t.is_basepoint) return t;
    if (t.length() != f.q)
        throw std::invalid_argument("reindex: tuple length " + std::to_string(t.length()) +
                                    " != injection domain " + std::to_string(f.q));
    ObjectTuple out{false, std::vector<int>(f.p, unit_obj)};
    for (int i = 1; i <= f.q; ++i) out.entries[f.apply(i) - 1] = t.entries[i - 1];
    return out;
}

// ---------------------------------------------------------------------------
// Smash products of pointed sets, with the fixed convention that the leftmost
// factor is most significant: (a,b) in <m>^<n> corresponds to (a-1)*n + b.

inline long long smash_size(const std::vector<int>& sizes) {
    long long prod = 1;
    for (int n : sizes) prod *= n;
    return prod;
}

// Encode a tuple (a_1..a_q), a_i in 1..n_i, as an element of <prod n_i>.
inline int smash_encode(const std::vector<int>& a, const std::vector<int>& sizes) {
    long long idx = 0;
    for (size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + (a[i] - 1);
    return static_cast<int>(idx + 1);
}

inline std::vector<int> smash_decode(int x, const std::vector<int>& sizes) {
    std::vector<int> a(sizes.size());
    long long idx = x - 1;
    for (size_t i = sizes.size(); i-- > 0;) {
        a[i] = static_cast<int>(idx % sizes[i]) + 1;
        idx /= sizes[i];
    }
    return a;
}

// The collapse of a tuple of sizes: the smash product <n_1 ... n_q>, with the
// empty tuple giving <1> and the basepoint giving <0>.
inline PointedSet smash_objects(const ObjectTuple& sizes) {
    if (sizes.is_basepoint) return PointedSet{0};
    return PointedSet{static_cast<int>(smash_size(sizes.entries))};
}

// The collapse of a tuple morphism (f, psi): <prod n_i> -> <prod m_j>, given by
// b_j = psi_j(a_{f^{-1}(j)}) with a over the empty preimage read as 1.  Any
// zero component sends the whole element to the basepoint.
inline PointedMap smash_maps(const Injection& f, const std::vector<PointedMap>& psis,
                             const std::vector<int>& src_sizes,
                             const std::vector<int>& dst_sizes) {
    if (static_cast<int>(src_sizes.size()) != f.q || static_cast<int>(dst_sizes.size()) != f.p ||
        static_cast<int>(psis.size()) != f.p || !f.well_formed())
        throw std::invalid_argument("smash_maps: malformed datum");
    for (int j = 1; j <= f.p; ++j) {
        int i = f.preimage(j);
        int expect = i ? src_sizes[i - 1] : 1;
        if (psis[j - 1].dom != expect || psis[j - 1].cod != dst_sizes[j - 1])
            throw std::invalid_argument("smash_maps: component " + std::to_string(j) +
                                        " has the wrong type");
    }
    PointedMap out{static_cast<int>(smash_size(src_sizes)),
                   static_cast<int>(smash_size(dst_sizes)), {}};
    out.values.reserve(out.dom);
    for (int x = 1; x <= out.dom; ++x) {
        auto a = smash_decode(x, src_sizes);
        std::vector<int> b(f.p);
        bool dead = false;
        for (int j = 1; j <= f.p; ++j) {
            int i = f.preimage(j);
            b[j - 1] = psis[j - 1].apply(i ? a[i - 1] : 1);
            if (b[j - 1] == 0) {
                dead = true;
                break;
            }
        }
        out.values.push_back(dead ? 0 : smash_encode(b, dst_sizes));
    }
    return out;
}

// ---------------------------------------------------------------------------
// The truncated opposite simplex category with a freely adjoined zero object.
// Objects: "*" (id 0) and [0]..[d].  A morphism [a] -> [b] away from the zero
// object is a monotone map [b] -> [a] read backwards; composition is reversed.
// Each hom-set additionally contains one absorbing zero morphism (listed
// first), making "*" initial and terminal.

struct DeltaOpCat {
    int max_degree = 0;
    FinCategory cat;
    // per morphism id: the underlying monotone value table (empty for zeros)
    std::vector<std::vector<int>> monotone;
    std::vector<std::vector<int>> hom_base;  // by object id pair; -1 for zeros-only pairs

    int obj_of_degree(int n) const { return n + 1; }  // object id of [n]
};

inline std::vector<std::vector<int>> enum_monotone(int m, int n) {
    // monotone maps [m] -> [n], lex order
    std::vector<std::vector<int>> out;
    std::vector<int> v(m + 1, 0);
    while (true) {
        out.push_back(v);
        int k = m;
        while (k >= 0 && v[k] == n) --k;
        if (k < 0) break;
        ++v[k];
        for (int j = k + 1; j <= m; ++j) v[j] = v[k];
    }
    return out;
}

inline DeltaOpCat make_delta_op(int max_degree) {
    DeltaOpCat d;
    d.max_degree = max_degree;
    CategoryBuilder b;
    b.add_object("*");
    for (int n = 0; n <= max_degree; ++n) b.add_object("[" + std::to_string(n) + "]");
    int O = max_degree + 2;
    d.hom_base.assign(O, std::vector<int>(O, -1));

    auto mor_name = [&](int a_deg, int b_deg, const std::vector<int>& v) {
        std::string s = "[" + std::to_string(a_deg) + "]->[" + std::to_string(b_deg) + "]|[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };

    // one zero morphism per ordered pair, then the genuine simplex operators
    std::vector<std::vector<int>> zero_id(O, std::vector<int>(O, -1));
    for (int a = 0; a < O; ++a)
        for (int c = 0; c < O; ++c) {
            zero_id[a][c] = b.add_morphism("0:" + b.peek().objects[a] + "->" + b.peek().objects[c],
                                           a, c);
            d.monotone.emplace_back();
            if (a > 0 && c > 0) {
                d.hom_base[a][c] = static_cast<int>(d.monotone.size());
                for (auto& v : enum_monotone(c - 1, a - 1)) {
                    b.add_morphism(mor_name(a - 1, c - 1, v), a, c);
                    d.monotone.push_back(v);
                }
            }
        }
    b.set_identity(0, zero_id[0][0]);
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<int> idv(n + 1);
        std::iota(idv.begin(), idv.end(), 0);
        auto all = enum_monotone(n, n);
        int rank = static_cast<int>(std::find(all.begin(), all.end(), idv) - all.begin());
        b.set_identity(n + 1, d.hom_base[n + 1][n + 1] + rank);
    }
    b.set_basepoint(0);

    const FinCategory& peek = b.peek();
    int M = peek.num_morphisms();
    b.begin_compose();
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g) {
            if (peek.mor_dst[f] != peek.mor_src[g]) continue;
            int a = peek.mor_src[f], c = peek.mor_dst[g];
            if (d.monotone[f].empty() || d.monotone[g].empty()) {
                b.set_compose(g, f, zero_id[a][c]);
                continue;
            }
            // reversed composition of the underlying monotone maps
            const auto &fv = d.monotone[f], &gv = d.monotone[g];
            std::vector<int> hv(gv.size());
            for (size_t i = 0; i < gv.size(); ++i) hv[i] = fv[gv[i]];
            auto all = enum_monotone(static_cast<int>(hv.size()) - 1, a - 1);
            int rank = static_cast<int>(std::find(all.begin(), all.end(), hv) - all.begin());
            b.set_compose(g, f, d.hom_base[a][c] + rank);
        }
    b.finish_pointed();
    d.cat = b.take();
    return d;
}

}  // namespace fincat
