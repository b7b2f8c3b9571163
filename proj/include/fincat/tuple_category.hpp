#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/skeletal.hpp"

// The tuple category over a pointed base: objects are finite tuples of nonzero
// base objects (plus an absorbing basepoint), morphisms pair an injection of
// slots with nonzero base-morphism components, and anything with a zero
// component collapses to the zero morphism.  Instantiated over the pointed
// finite sets truncation and over the truncated opposite simplex category.

namespace fincat {

// A base category suitable for the tuple construction: pointed, with a chosen
// nonzero unit object used to fill slots missed by the reindexing injection.
struct TupleBase {
    const FinCategory* cat = nullptr;
    int zero_obj = 0;
    int unit_obj = 1;
};

struct TupleArrow {
    bool zero = false;
    ObjectTuple src, dst;
    Injection inj;          // meaningful iff !zero
    std::vector<int> psis;  // base morphism ids, one per dst slot, all nonzero

    friend bool operator==(const TupleArrow&, const TupleArrow&) = default;
};

inline TupleArrow zero_arrow(ObjectTuple src, ObjectTuple dst) {
    return TupleArrow{true, std::move(src), std::move(dst), {}, {}};
}

inline TupleArrow identity_arrow(const TupleBase& base, const ObjectTuple& t) {
    if (t.is_basepoint) return zero_arrow(t, t);
    TupleArrow a{false, t, t, identity_injection(t.length()), {}};
    for (int e : t.entries) a.psis.push_back(base.cat->identities[e]);
    return a;
}

inline std::string show_arrow(const TupleArrow& a, const FinCategory& base) {
    if (a.zero) return "0:" + show_tuple(a.src, base) + "->" + show_tuple(a.dst, base);
    std::string s = show_tuple(a.src, base) + "->" + show_tuple(a.dst, base) + ":f=[";
    for (size_t i = 0; i < a.inj.images.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.inj.images[i]);
    }
    s += "];p=[";
    for (size_t i = 0; i < a.psis.size(); ++i) {
        if (i) s += "|";
        s += base.mor_names[a.psis[i]];
    }
    return s + "]";
}

// Slot j of the domain of the j-th component: the entry over f^{-1}(j), or the
// unit object when the slot is missed.
inline int component_domain(const TupleBase& base, const Injection& f, const ObjectTuple& src,
                            int j) {
    int i = f.preimage(j);
    return i ? src.entries[i - 1] : base.unit_obj;
}

inline bool arrow_well_formed(const TupleBase& base, const TupleArrow& a) {
    if (a.zero) return true;
    if (a.src.is_basepoint || a.dst.is_basepoint) return false;
    if (!a.inj.well_formed() || a.inj.q != a.src.length() || a.inj.p != a.dst.length() ||
        static_cast<int>(a.psis.size()) != a.inj.p)
        return false;
    for (int j = 1; j <= a.inj.p; ++j) {
        int m = a.psis[j - 1];
        if (base.cat->is_zero_mor(m)) return false;
        if (base.cat->mor_src[m] != component_domain(base, a.inj, a.src, j) ||
            base.cat->mor_dst[m] != a.dst.entries[j - 1])
            return false;
    }
    return true;
}

// (g,phi) ∘ (f,psi) = (g∘f, phi ∘ g_* psi): component j is phi_j when slot j is
// missed by g, else phi_j ∘ psi_{g^{-1}(j)}.  A zero component collapses the
// whole composite.
inline TupleArrow compose_tuple(const TupleBase& base, const TupleArrow& g, const TupleArrow& f) {
    if (!(f.dst == g.src)) throw std::invalid_argument("compose_tuple: non-composable pair");
    if (f.zero || g.zero) return zero_arrow(f.src, g.dst);
    TupleArrow h{false, f.src, g.dst, compose_injections(g.inj, f.inj), {}};
    h.psis.reserve(g.inj.p);
    for (int j = 1; j <= g.inj.p; ++j) {
        int k = g.inj.preimage(j);
        int comp = k == 0 ? g.psis[j - 1] : base.cat->compose(g.psis[j - 1], f.psis[k - 1]);
        if (base.cat->is_zero_mor(comp)) return zero_arrow(f.src, g.dst);
        h.psis.push_back(comp);
    }
    return h;
}

// All morphisms src -> dst: injections in lex order, then per injection the
// component tuples in odometer order over the base's nonzero hom lists (last
// slot fastest).  The zero morphism is appended at the end.
inline std::vector<TupleArrow> enum_tuple_hom(const TupleBase& base, const ObjectTuple& src,
                                              const ObjectTuple& dst, bool nonzero_only = false) {
    std::vector<TupleArrow> out;
    if (!src.is_basepoint && !dst.is_basepoint) {
        for (const auto& f : enum_injections(src.length(), dst.length())) {
            std::vector<std::vector<int>> choices(f.p);
            bool feasible = true;
            for (int j = 1; j <= f.p; ++j) {
                choices[j - 1] =
                    base.cat->nonzero_hom(component_domain(base, f, src, j), dst.entries[j - 1]);
                if (choices[j - 1].empty()) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            std::vector<size_t> pick(f.p, 0);
            while (true) {
                TupleArrow a{false, src, dst, f, {}};
                for (int j = 0; j < f.p; ++j) a.psis.push_back(choices[j][pick[j]]);
                out.push_back(std::move(a));
                int j = f.p - 1;
                while (j >= 0 && ++pick[j] == choices[j].size()) pick[j--] = 0;
                if (j < 0) break;
            }
        }
    }
    if (!nonzero_only) out.push_back(zero_arrow(src, dst));
    return out;
}

// Count without materializing: sum over injections of the product of nonzero
// hom-set sizes (with the unit fill on missed slots).
inline long long tuple_hom_count(const TupleBase& base, const ObjectTuple& src,
                                 const ObjectTuple& dst) {
    if (src.is_basepoint || dst.is_basepoint) return 0;
    long long total = 0;
    for (const auto& f : enum_injections(src.length(), dst.length())) {
        long long prod = 1;
        for (int j = 1; j <= f.p; ++j)
            prod *= static_cast<long long>(
                base.cat->nonzero_hom(component_domain(base, f, src, j), dst.entries[j - 1])
                    .size());
        total += prod;
    }
    return total;
}

// Concatenation.  The basepoint absorbs; the empty tuple is the unit.
inline ObjectTuple oplus(const ObjectTuple& a, const ObjectTuple& b, int q_max) {
    if (a.is_basepoint || b.is_basepoint) return basepoint_tuple();
    ObjectTuple out{false, a.entries};
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    if (out.length() > q_max)
        throw TruncationError("oplus: concatenated length " + std::to_string(out.length()) +
                              " exceeds q_max=" + std::to_string(q_max));
    return out;
}

inline TupleArrow oplus_arrow(const TupleArrow& u, const TupleArrow& v, int q_max) {
    ObjectTuple src = oplus(u.src, v.src, q_max), dst = oplus(u.dst, v.dst, q_max);
    if (u.zero || v.zero || src.is_basepoint || dst.is_basepoint) return zero_arrow(src, dst);
    TupleArrow out{false, src, dst, block_sum(u.inj, v.inj), u.psis};
    out.psis.insert(out.psis.end(), v.psis.begin(), v.psis.end());
    return out;
}

// ---------------------------------------------------------------------------
// Materialized tuple category up to tuple length q_max.

struct TupleCat {
    TupleBase base;
    int q_max = 0;
    FinCategory cat;
    std::vector<ObjectTuple> tuples;  // per object id; id 0 is the basepoint
    std::vector<TupleArrow> arrows;   // per morphism id

    int object_id(const ObjectTuple& t) const {
        auto it = obj_index_.find(t.is_basepoint ? std::vector<int>{-1} : t.entries);
        if (it == obj_index_.end())
            throw TruncationError("tuple " + show_tuple(t, *base.cat) + " not in the truncation");
        return it->second;
    }

    int arrow_id(const TupleArrow& a) const {
        auto it = mor_index_.find(encode(a));
        if (it == mor_index_.end())
            throw std::invalid_argument("arrow " + show_arrow(a, *base.cat) + " not found");
        return it->second;
    }

    static std::vector<int> encode(const TupleArrow& a) {
        std::vector<int> key;
        key.push_back(a.src.is_basepoint ? -1 : a.src.length());
        key.insert(key.end(), a.src.entries.begin(), a.src.entries.end());
        key.push_back(a.dst.is_basepoint ? -1 : a.dst.length());
        key.insert(key.end(), a.dst.entries.begin(), a.dst.entries.end());
        key.push_back(a.zero ? 1 : 0);
        key.insert(key.end(), a.inj.images.begin(), a.inj.images.end());
        key.push_back(-2);
        key.insert(key.end(), a.psis.begin(), a.psis.end());
        return key;
    }

    std::map<std::vector<int>, int> obj_index_;
    std::map<std::vector<int>, int> mor_index_;
};

// All objects of the truncation in canonical order: the basepoint first, then
// tuples of nonzero base objects by length, lexicographically within a length.
inline std::vector<ObjectTuple> enum_truncated_tuples(const TupleBase& base, int q_max) {
    std::vector<int> nonzero_objs;
    for (int o = 0; o < base.cat->num_objects(); ++o)
        if (o != base.zero_obj) nonzero_objs.push_back(o);

    std::vector<ObjectTuple> out{basepoint_tuple()};
    for (int q = 0; q <= q_max; ++q) {
        ObjectTuple tu{false, std::vector<int>(q)};
        auto rec = [&](auto&& self, int i) -> void {
            if (i == q) {
                out.push_back(tu);
                return;
            }
            for (int o : nonzero_objs) {
                tu.entries[i] = o;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

inline TupleCat make_tuple_cat(TupleBase base, int q_max) {
    if (!base.cat->pointed()) throw std::invalid_argument("make_tuple_cat: base lacks zero object");
    if (base.unit_obj == base.zero_obj || base.cat->is_zero_mor(base.cat->identities[base.unit_obj]))
        throw std::invalid_argument("make_tuple_cat: unit object must be nonzero");
    TupleCat t;
    t.base = base;
    t.q_max = q_max;

    CategoryBuilder b;
    for (const ObjectTuple& tu : enum_truncated_tuples(base, q_max)) {
        int id = b.add_object(show_tuple(tu, *base.cat));
        t.tuples.push_back(tu);
        t.obj_index_[tu.is_basepoint ? std::vector<int>{-1} : tu.entries] = id;
    }

    int O = static_cast<int>(t.tuples.size());
    for (int a = 0; a < O; ++a)
        for (int c = 0; c < O; ++c)
            for (auto& arr : enum_tuple_hom(base, t.tuples[a], t.tuples[c])) {
                int id = b.add_morphism(show_arrow(arr, *base.cat), a, c);
                t.mor_index_[TupleCat::encode(arr)] = id;
                t.arrows.push_back(std::move(arr));
            }
    for (int a = 0; a < O; ++a) b.set_identity(a, t.arrow_id(identity_arrow(base, t.tuples[a])));
    b.set_basepoint(0);

    int M = static_cast<int>(t.arrows.size());
    b.begin_compose();
    const FinCategory& peek = b.peek();
    for (int f = 0; f < M; ++f)
        for (int g = 0; g < M; ++g)
            if (peek.mor_dst[f] == peek.mor_src[g])
                b.set_compose(g, f, t.arrow_id(compose_tuple(base, t.arrows[g], t.arrows[f])));
    b.finish_pointed();
    t.cat = b.take();
    return t;
}

// The length-one inclusion b |-> (b).  Fully faithful: hom((a),(b)) only admits
// the identity injection, whose single component ranges over the base hom-set.
inline Functor length_one_inclusion(const TupleCat& t) {
    const FinCategory& base = *t.base.cat;
    Functor F{&base, &t.cat, {}, {}};
    F.on_obj.resize(base.num_objects());
    for (int o = 0; o < base.num_objects(); ++o)
        F.on_obj[o] = o == t.base.zero_obj ? 0 : t.object_id(ObjectTuple{false, {o}});
    F.on_mor.resize(base.num_morphisms());
    for (int m = 0; m < base.num_morphisms(); ++m) {
        int a = base.mor_src[m], c = base.mor_dst[m];
        ObjectTuple src = normalize_tuple(ObjectTuple{false, {a}}, t.base.zero_obj);
        ObjectTuple dst = normalize_tuple(ObjectTuple{false, {c}}, t.base.zero_obj);
        if (base.is_zero_mor(m)) {
            F.on_mor[m] = t.arrow_id(zero_arrow(src, dst));
        } else {
            F.on_mor[m] = t.arrow_id(TupleArrow{false, src, dst, identity_injection(1), {m}});
        }
    }
    return F;
}

// The collapse functor of a tuple category over a pointed-sets truncation:
// smash the entries together.  codomain must be wide enough for the products.
inline Functor collapse_functor(const TupleCat& t, const SkelCat& base_skel,
                                const SkelCat& codomain) {
    if (&base_skel.cat != t.base.cat)
        throw std::invalid_argument("collapse_functor: tuple category not over this base");
    Functor F{&t.cat, &codomain.cat, {}, {}};
    F.on_obj.reserve(t.tuples.size());
    for (const auto& tu : t.tuples) {
        PointedSet s = smash_objects(tu);
        if (s.size > codomain.max_size)
            throw TruncationError("collapse_functor: product " + show(s) +
                                  " exceeds codomain truncation N=" +
                                  std::to_string(codomain.max_size));
        F.on_obj.push_back(s.size);
    }
    F.on_mor.reserve(t.arrows.size());
    for (const auto& a : t.arrows) {
        if (a.zero) {
            F.on_mor.push_back(codomain.id_of(
                zero_map(smash_objects(a.src).size, smash_objects(a.dst).size)));
        } else {
            std::vector<PointedMap> psis;
            for (int m : a.psis) psis.push_back(base_skel.maps[m]);
            F.on_mor.push_back(
                codomain.id_of(smash_maps(a.inj, psis, a.src.entries, a.dst.entries)));
        }
    }
    return F;
}

// One census row per ordered object pair, in object id order.
struct CensusRow {
    std::string src, dst;
    long long nonzero = 0;
};

inline std::vector<CensusRow> hom_census(const TupleCat& t) {
    std::vector<CensusRow> rows;
    int O = t.cat.num_objects();
    for (int a = 0; a < O; ++a)
        for (int c = 0; c < O; ++c)
            rows.push_back({t.cat.objects[a], t.cat.objects[c],
                            static_cast<long long>(t.cat.nonzero_hom(a, c).size())});
    return rows;
}

// Convenience instances.
inline TupleBase skel_base(const SkelCat& s) { return TupleBase{&s.cat, 0, 1}; }
inline TupleBase delta_base(const DeltaOpCat& d) { return TupleBase{&d.cat, 0, d.obj_of_degree(0)}; }

// Inclusion of a tuple truncation into one over a larger base, along a given
// inclusion of the bases (entrywise on tuples, componentwise on arrows).
inline Functor tuple_cat_inclusion(const TupleCat& small, const TupleCat& big,
                                   const Functor& base_incl) {
    if (base_incl.dom != small.base.cat || base_incl.cod != big.base.cat)
        throw std::invalid_argument("tuple_cat_inclusion: base inclusion does not match");
    Functor F{&small.cat, &big.cat, {}, {}};
    for (const auto& t : small.tuples) {
        ObjectTuple mapped = t;
        for (int& e : mapped.entries) e = base_incl.on_obj[e];
        F.on_obj.push_back(big.object_id(mapped));
    }
    for (const auto& a : small.arrows) {
        TupleArrow mapped = a;
        for (int& e : mapped.src.entries) e = base_incl.on_obj[e];
        for (int& e : mapped.dst.entries) e = base_incl.on_obj[e];
        for (int& p : mapped.psis) p = base_incl.on_mor[p];
        F.on_mor.push_back(big.arrow_id(mapped));
    }
    return F;
}

}  // namespace fincat
