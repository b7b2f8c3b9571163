#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fincat/coend.hpp"
#include "fincat/report.hpp"
#include "fincat/tuple_category.hpp"
#include "fincat/universe.hpp"

// JSON (de)serialization and the resolver for built-in index categories.
// Dumps are canonical: nlohmann::json orders object keys, all arrays are in
// the library's deterministic enumeration order, and nothing time-dependent
// is ever written.

namespace fincat {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Pointed sets, maps, injections, tuples

inline json pointed_set_json(const PointedSet& s) { return json{{"size", s.size}}; }

inline json pointed_map_json(const PointedMap& f) {
    return json{{"dom", f.dom}, {"cod", f.cod}, {"values", f.values}};
}

inline PointedMap pointed_map_from_json(const json& j) {
    PointedMap f{j.at("dom").get<int>(), j.at("cod").get<int>(),
                 j.at("values").get<std::vector<int>>()};
    if (!f.well_formed()) throw std::invalid_argument("malformed pointed map: " + j.dump());
    return f;
}

inline json injection_json(const Injection& f) {
    return json{{"q", f.q}, {"p", f.p}, {"images", f.images}};
}

inline Injection injection_from_json(const json& j) {
    Injection f{j.at("q").get<int>(), j.at("p").get<int>(),
                j.at("images").get<std::vector<int>>()};
    if (!f.well_formed()) throw std::invalid_argument("malformed injection: " + j.dump());
    return f;
}

inline json tuple_json(const ObjectTuple& t) {
    if (t.is_basepoint) return json{{"basepoint", true}};
    return json{{"entries", t.entries}};
}

inline ObjectTuple tuple_from_json(const json& j) {
    if (j.contains("basepoint") && j.at("basepoint").get<bool>()) return basepoint_tuple();
    return ObjectTuple{false, j.at("entries").get<std::vector<int>>()};
}

// Tuple arrows over the skeletal base carry their components as value tables.
inline json tuple_arrow_json(const TupleArrow& a, const SkelCat& base) {
    json j{{"src", tuple_json(a.src)}, {"dst", tuple_json(a.dst)}};
    if (a.zero) {
        j["zero"] = true;
        return j;
    }
    j["f"] = injection_json(a.inj);
    json psis = json::array();
    for (int m : a.psis) psis.push_back(pointed_map_json(base.maps[m]));
    j["psis"] = psis;
    return j;
}

inline TupleArrow tuple_arrow_from_json(const json& j, const SkelCat& base) {
    TupleArrow a;
    a.src = tuple_from_json(j.at("src"));
    a.dst = tuple_from_json(j.at("dst"));
    if (j.contains("zero") && j.at("zero").get<bool>()) {
        a.zero = true;
        return a;
    }
    a.inj = injection_from_json(j.at("f"));
    for (const auto& p : j.at("psis")) a.psis.push_back(base.id_of(pointed_map_from_json(p)));
    if (!arrow_well_formed(skel_base(base), a))
        throw std::invalid_argument("malformed tuple morphism: " + j.dump());
    return a;
}

// ---------------------------------------------------------------------------
// Categories.  Composition is stored as name triples [g, f, g∘f] in id order,
// so a dump-load round trip is the identity.

inline json category_json(const FinCategory& c) {
    json j;
    j["objects"] = c.objects;
    json mors = json::array();
    for (int m = 0; m < c.num_morphisms(); ++m)
        mors.push_back(json{{"name", c.mor_names[m]},
                            {"src", c.objects[c.mor_src[m]]},
                            {"dst", c.objects[c.mor_dst[m]]}});
    j["morphisms"] = mors;
    json ids = json::object();
    for (int x = 0; x < c.num_objects(); ++x) ids[c.objects[x]] = c.mor_names[c.identities[x]];
    j["identities"] = ids;
    json comp = json::array();
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f)
            if (c.composable(g, f))
                comp.push_back(json::array(
                    {c.mor_names[g], c.mor_names[f], c.mor_names[c.compose(g, f)]}));
    j["compose"] = comp;
    if (c.pointed()) j["basepoint"] = c.objects[c.basepoint];
    return j;
}

inline FinCategory category_from_json(const json& j) {
    CategoryBuilder b;
    std::map<std::string, int> obj_id, mor_id;
    for (const auto& name : j.at("objects")) {
        std::string n = name.get<std::string>();
        if (obj_id.count(n)) throw std::invalid_argument("duplicate object name " + n);
        obj_id[n] = b.add_object(n);
    }
    for (const auto& m : j.at("morphisms")) {
        std::string n = m.at("name").get<std::string>();
        if (mor_id.count(n)) throw std::invalid_argument("duplicate morphism name " + n);
        mor_id[n] = b.add_morphism(n, obj_id.at(m.at("src").get<std::string>()),
                                   obj_id.at(m.at("dst").get<std::string>()));
    }
    for (const auto& [obj, mor] : j.at("identities").items())
        b.set_identity(obj_id.at(obj), mor_id.at(mor.get<std::string>()));
    b.begin_compose();
    for (const auto& triple : j.at("compose"))
        b.set_compose(mor_id.at(triple.at(0).get<std::string>()),
                      mor_id.at(triple.at(1).get<std::string>()),
                      mor_id.at(triple.at(2).get<std::string>()));
    if (j.contains("basepoint")) {
        b.set_basepoint(obj_id.at(j.at("basepoint").get<std::string>()));
        b.finish_pointed();
    }
    return b.take();
}

// ---------------------------------------------------------------------------
// Index references: either a builtin name string ("fskel:2", "gstar:2,2",
// "deltaop:3", "estar:2,2") resolved through the universe cache, or an inline
// category object adopted into it.

inline const FinCategory& resolve_index(IndexUniverse& universe, const json& ref) {
    if (ref.is_object()) return universe.adopt(category_from_json(ref));
    return universe.resolve_ref(ref.get<std::string>());
}

// ---------------------------------------------------------------------------
// Set- and category-valued diagrams

inline json set_diagram_json(const SetDiagram& X, const json& index_ref) {
    const FinCategory& C = *X.index;
    json j{{"index", index_ref}, {"kind", "set"}};
    json on_obj = json::object();
    for (int x = 0; x < C.num_objects(); ++x) on_obj[C.objects[x]] = X.levels[x];
    j["on_objects"] = on_obj;
    json on_mor = json::object();
    for (int m = 0; m < C.num_morphisms(); ++m) on_mor[C.mor_names[m]] = X.action[m].values;
    j["on_morphisms"] = on_mor;
    return j;
}

inline SetDiagram set_diagram_from_json(const json& j, IndexUniverse& universe) {
    if (j.value("kind", "set") != "set")
        throw std::invalid_argument("expected a set-valued diagram");
    const FinCategory& C = resolve_index(universe, j.at("index"));
    SetDiagram X{&C, std::vector<int>(C.num_objects(), -1), {}};
    for (const auto& [name, size] : j.at("on_objects").items()) {
        auto it = std::find(C.objects.begin(), C.objects.end(), name);
        if (it == C.objects.end())
            throw std::invalid_argument("diagram mentions unknown object " + name);
        X.levels[it - C.objects.begin()] = size.get<int>();
    }
    for (int x = 0; x < C.num_objects(); ++x)
        if (X.levels[x] < 0)
            throw std::invalid_argument("diagram is missing object " + C.objects[x]);
    const auto& on_mor = j.at("on_morphisms");
    for (int m = 0; m < C.num_morphisms(); ++m) {
        if (!on_mor.contains(C.mor_names[m]))
            throw std::invalid_argument("diagram is missing morphism " + C.mor_names[m]);
        X.action.push_back(PointedMap{X.levels[C.mor_src[m]], X.levels[C.mor_dst[m]],
                                      on_mor.at(C.mor_names[m]).get<std::vector<int>>()});
        if (!X.action.back().well_formed())
            throw std::invalid_argument("malformed action at " + C.mor_names[m]);
    }
    return X;
}

inline json functor_table_json(const FunctorTable& t, const FinCategory& A, const FinCategory& B) {
    json on_obj = json::object(), on_mor = json::object();
    for (int x = 0; x < A.num_objects(); ++x) on_obj[A.objects[x]] = B.objects[t.on_obj[x]];
    for (int m = 0; m < A.num_morphisms(); ++m) on_mor[A.mor_names[m]] = B.mor_names[t.on_mor[m]];
    return json{{"on_objects", on_obj}, {"on_morphisms", on_mor}};
}

inline json cat_diagram_json(const CatDiagram& X, const json& index_ref) {
    const FinCategory& C = *X.index;
    json j{{"index", index_ref}, {"kind", "cat"}};
    json on_obj = json::object();
    for (int x = 0; x < C.num_objects(); ++x) on_obj[C.objects[x]] = category_json(X.values[x]);
    j["on_objects"] = on_obj;
    json on_mor = json::object();
    for (int m = 0; m < C.num_morphisms(); ++m)
        on_mor[C.mor_names[m]] =
            functor_table_json(X.action[m], X.values[C.mor_src[m]], X.values[C.mor_dst[m]]);
    j["on_morphisms"] = on_mor;
    return j;
}

inline CatDiagram cat_diagram_from_json(const json& j, IndexUniverse& universe) {
    if (j.value("kind", "") != "cat")
        throw std::invalid_argument("expected a category-valued diagram");
    const FinCategory& C = resolve_index(universe, j.at("index"));
    CatDiagram X{&C, {}, {}};
    X.values.resize(C.num_objects());
    for (int x = 0; x < C.num_objects(); ++x) {
        if (!j.at("on_objects").contains(C.objects[x]))
            throw std::invalid_argument("diagram is missing object " + C.objects[x]);
        X.values[x] = category_from_json(j.at("on_objects").at(C.objects[x]));
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        if (!j.at("on_morphisms").contains(C.mor_names[m]))
            throw std::invalid_argument("diagram is missing morphism " + C.mor_names[m]);
        const json& tj = j.at("on_morphisms").at(C.mor_names[m]);
        const FinCategory& A = X.values[C.mor_src[m]];
        const FinCategory& B = X.values[C.mor_dst[m]];
        FunctorTable t;
        for (int x = 0; x < A.num_objects(); ++x) {
            std::string img = tj.at("on_objects").at(A.objects[x]).get<std::string>();
            auto it = std::find(B.objects.begin(), B.objects.end(), img);
            if (it == B.objects.end()) throw std::invalid_argument("unknown object " + img);
            t.on_obj.push_back(static_cast<int>(it - B.objects.begin()));
        }
        for (int f = 0; f < A.num_morphisms(); ++f) {
            std::string img = tj.at("on_morphisms").at(A.mor_names[f]).get<std::string>();
            auto it = std::find(B.mor_names.begin(), B.mor_names.end(), img);
            if (it == B.mor_names.end()) throw std::invalid_argument("unknown morphism " + img);
            t.on_mor.push_back(static_cast<int>(it - B.mor_names.begin()));
        }
        X.action.push_back(std::move(t));
    }
    return X;
}

// ---------------------------------------------------------------------------
// Lift classes, censuses, classification tables, check reports

inline json lift_json(const Lift& L) {
    const FinCategory& D = *L.incl->cod;
    const FinCategory& C = *L.incl->dom;
    json out = json::array();
    for (int t = 0; t < D.num_objects(); ++t) {
        const LiftLevel& lvl = L.levels[t];
        json classes = json::array();
        for (int c = 1; c <= lvl.value.size; ++c) {
            const LiftGen& g = lvl.rep(c);
            classes.push_back(json{{"source", C.objects[g.n]},
                                   {"arrow", D.mor_names[g.theta]},
                                   {"element", g.x}});
        }
        out.push_back(json{{"object", D.objects[t]}, {"size", lvl.value.size},
                           {"classes", classes}});
    }
    return out;
}

inline json census_json(const TupleCat& t) {
    auto rows = hom_census(t);
    long long nonzero = 0;
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{{"src", r.src}, {"dst", r.dst}, {"nonzero", r.nonzero}});
        nonzero += r.nonzero;
    }
    long long objects = t.cat.num_objects();
    return json{{"objects", objects},
                {"pairs", arr},
                {"total_nonzero", nonzero},
                {"total", static_cast<long long>(t.cat.num_morphisms())}};
}

inline std::string census_csv(const TupleCat& t) {
    std::string out = "src,dst,nonzero\n";
    for (const auto& r : hom_census(t))
        out += "\"" + r.src + "\",\"" + r.dst + "\"," + std::to_string(r.nonzero) + "\n";
    return out;
}

inline json report_json(const CheckReport& rep) {
    CheckReport sorted = rep;
    sorted.sort_by_name();
    json checks = json::array();
    for (const auto& c : sorted.checks) {
        json e{{"name", c.name}, {"status", c.skipped ? "skip" : (c.pass ? "pass" : "fail")}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    return json{{"config",
                 {{"trunc", rep.config.trunc_n},
                  {"qmax", rep.config.q_max},
                  {"degree", rep.config.degree},
                  {"seed", rep.config.seed},
                  {"random_count", rep.config.random_count},
                  {"budget", rep.config.budget},
                  {"stability_margin", rep.config.stability_margin}}},
                {"checks", checks},
                {"summary",
                 {{"total", sorted.checks.size()},
                  {"failed", sorted.failures()},
                  {"skipped", sorted.skips()}}}};
}

// ---------------------------------------------------------------------------
// DOT export: objects as nodes, non-identity morphisms as edges (zero
// morphisms dashed).  Readable for the small fixture categories.

inline std::string dot_of_category(const FinCategory& c, const std::string& name) {
    std::string out = "digraph \"" + name + "\" {\n  rankdir=LR;\n";
    for (int x = 0; x < c.num_objects(); ++x) {
        out += "  n" + std::to_string(x) + " [label=\"" + c.objects[x] + "\"";
        if (x == c.basepoint) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (int m = 0; m < c.num_morphisms(); ++m) {
        if (m == c.identities[c.mor_src[m]] && c.mor_src[m] == c.mor_dst[m]) continue;
        out += "  n" + std::to_string(c.mor_src[m]) + " -> n" + std::to_string(c.mor_dst[m]) +
               " [label=\"" + c.mor_names[m] + "\"";
        if (c.pointed() && c.is_zero_mor(m)) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace fincat
