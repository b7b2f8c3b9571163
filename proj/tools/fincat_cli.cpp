// Command-line workbench over the library headers.  Every output on stdout is
// canonical (deterministic for a fixed configuration); anything timing-related
// goes to stderr.  Exit codes: 0 = pass, 1 = a requested check failed,
// 2 = malformed input or configuration.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fincat/json_io.hpp"
#include "fincat/suite.hpp"

namespace {

using namespace fincat;
using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

// Inline JSON, or @path to read from a file.
json read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return read_json_file(arg.substr(1));
    return json::parse(arg);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Object tokens: "<2>" (base), "[1]" (simplicial base), "*" (basepoint),
// "(2,3)" / "()" (tuples over the base), "([0],[1])" (tuples over degrees).
struct Token {
    enum Kind { kBasepoint, kSkel, kDelta, kTuple, kDeltaTuple } kind = kTuple;
    int n = 0;
    std::vector<int> entries;
};

int parse_int(const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

Token parse_token(const std::string& s) {
    if (s == "*") return Token{Token::kBasepoint, 0, {}};
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>')
        return Token{Token::kSkel, parse_int(s.substr(1, s.size() - 2)), {}};
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
        return Token{Token::kDelta, parse_int(s.substr(1, s.size() - 2)), {}};
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        Token t{Token::kTuple, 0, {}};
        std::string body = s.substr(1, s.size() - 2);
        if (body.empty()) return t;
        std::stringstream ss(body);
        for (std::string part; std::getline(ss, part, ',');) {
            if (part.size() >= 2 && part.front() == '[' && part.back() == ']') {
                t.kind = Token::kDeltaTuple;
                t.entries.push_back(parse_int(part.substr(1, part.size() - 2)));
            } else if (part.size() >= 2 && part.front() == '<' && part.back() == '>') {
                t.entries.push_back(parse_int(part.substr(1, part.size() - 2)));
            } else {
                t.entries.push_back(parse_int(part));
            }
        }
        return t;
    }
    throw std::invalid_argument("cannot parse object token '" + s + "'");
}

int find_object(const FinCategory& C, const std::string& name) {
    for (int x = 0; x < C.num_objects(); ++x)
        if (C.objects[x] == name) return x;
    throw std::invalid_argument("no object named '" + name + "'");
}

json delta_arrow_json(const TupleArrow& a, const DeltaOpCat& base) {
    json j{{"src", tuple_json(a.src)}, {"dst", tuple_json(a.dst)}};
    if (a.zero) {
        j["zero"] = true;
        return j;
    }
    j["f"] = injection_json(a.inj);
    json psis = json::array();
    for (int m : a.psis)
        psis.push_back(json{{"name", base.cat.mor_names[m]}, {"monotone", base.monotone[m]}});
    j["psis"] = psis;
    return j;
}

FinCategory named_category(const std::string& name) {
    if (name == "walking-arrow") return walking_arrow();
    if (name == "walking-iso") return walking_iso();
    if (name == "chain2") return chain_category(2);
    if (name == "chain3") return chain_category(3);
    if (name == "terminal") return terminal_category();
    throw std::invalid_argument("unknown category name '" + name + "'");
}

std::vector<char> named_weq(const FinCategory& C, const std::string& name) {
    if (name == "all") return weq_all(C);
    if (name == "identities") return weq_identities(C);
    if (name == "isos") return weq_isos(C);
    throw std::invalid_argument("unknown marking '" + name + "'");
}

int capped_estar_degree(int degree) {
    int d = std::min(degree, 2);
    if (d != degree)
        std::cerr << "note: the materialized simplicial instance caps its base degree at 2\n";
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for truncated pointed indexing categories"};
    app.require_subcommand(1);
    app.fallthrough();

    SuiteConfig cfg;
    std::string format = "json";
    app.add_option("--trunc", cfg.trunc_n, "base truncation N")->capture_default_str();
    app.add_option("--qmax", cfg.q_max, "maximum tuple length")->capture_default_str();
    app.add_option("--degree", cfg.degree, "maximum simplicial degree")->capture_default_str();
    app.add_option("--seed", cfg.seed, "master seed for randomized sweeps")->capture_default_str();
    app.add_option("--samples", cfg.random_count, "randomized diagrams per sweep")
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "candidate budget for enumerations")
        ->capture_default_str();
    app.add_option("--stability-margin", cfg.stability_margin,
                   "extra truncation for the stability diagnostic")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "dot"}));

    // hom
    auto* hom = app.add_subcommand("hom", "enumerate a hom-set");
    std::string hom_from, hom_to;
    bool hom_nonzero = false;
    hom->add_option("--from", hom_from, "source object token")->required();
    hom->add_option("--to", hom_to, "target object token")->required();
    hom->add_flag("--nonzero", hom_nonzero, "omit the zero morphism");

    // smash
    auto* smash = app.add_subcommand("smash", "collapse a tuple or tuple morphism");
    std::string smash_object, smash_morphism;
    smash->add_option("--object", smash_object, "tuple token, e.g. \"(2,3)\"");
    smash->add_option("--morphism", smash_morphism, "tuple morphism JSON (or @file)");

    // tuplecat
    auto* tuplecat = app.add_subcommand("tuplecat", "materialize and validate a tuple category");
    std::string tc_base = "fskel";
    tuplecat->add_option("--base", tc_base, "base category")
        ->check(CLI::IsMember({"fskel", "deltaop"}));

    // diagram
    auto* diagram = app.add_subcommand("diagram", "work with diagrams");
    diagram->require_subcommand(1);
    std::string dg_input, dg_functor = "inclusion", dg_at, dg_merge_at, dg_merge_pair;
    auto* dg_validate = diagram->add_subcommand("validate", "check functoriality and pointedness");
    dg_validate->add_option("--input,--fixture", dg_input, "diagram JSON file")->required();
    auto* dg_pre = diagram->add_subcommand("precompose", "restrict along a built-in functor");
    dg_pre->add_option("--input,--fixture", dg_input, "diagram JSON file")->required();
    dg_pre->add_option("--functor", dg_functor, "inclusion (tuple->base) or collapse (big base->tuple)")
        ->check(CLI::IsMember({"inclusion", "collapse"}));
    auto* dg_nerve = diagram->add_subcommand("nerve", "levelwise nerve of a cat-valued diagram");
    dg_nerve->add_option("--input,--fixture", dg_input, "diagram JSON file")->required();
    auto* dg_rep = diagram->add_subcommand("rep", "emit a representable diagram");
    dg_rep->add_option("--at", dg_at, "object token")->required();
    dg_rep->add_option("--merge-at", dg_merge_at, "object name for a quotient merge");
    dg_rep->add_option("--merge-pair", dg_merge_pair, "two element numbers, e.g. \"1,2\"");

    // lift
    auto* lift = app.add_subcommand("lift", "left adjoint classes of a base diagram");
    std::string lf_input, lf_at;
    bool lf_as_diagram = false;
    lift->add_option("--input,--fixture", lf_input, "diagram JSON file over the base")->required();
    lift->add_option("--at", lf_at, "single target object token");
    lift->add_flag("--as-diagram", lf_as_diagram, "emit the lifted diagram itself");

    // check
    auto* check = app.add_subcommand("check", "run named check groups (default: all)");
    std::vector<std::string> check_groups;
    std::string check_category;
    check->add_option("groups", check_groups, "subset of suite groups");
    check->add_option("--category", check_category, "validate a category JSON file instead");

    // classify
    auto* classify = app.add_subcommand("classify", "classification diagram levels");
    std::string cl_cat = "walking-iso", cl_weq = "all", cl_file;
    int cl_n = -1, cl_k = -1;
    bool cl_verify = false;
    classify->add_option("--cat", cl_cat, "named category")->capture_default_str();
    classify->add_option("--category", cl_file, "category JSON file (overrides --cat)");
    classify->add_option("--weq", cl_weq, "marking: all|identities|isos")->capture_default_str();
    classify->add_option("--n", cl_n, "maximum width");
    classify->add_option("--k", cl_k, "maximum nerve degree");
    classify->add_flag("--verify", cl_verify, "also check the bisimplicial identities");

    // segal
    auto* segal = app.add_subcommand("segal", "spine comparison at one bidegree");
    std::string sg_cat = "walking-iso", sg_weq = "all", sg_file;
    int sg_n = 2, sg_k = 1;
    segal->add_option("--cat", sg_cat, "named category")->capture_default_str();
    segal->add_option("--category", sg_file, "category JSON file (overrides --cat)");
    segal->add_option("--weq", sg_weq, "marking: all|identities|isos")->capture_default_str();
    segal->add_option("--n", sg_n, "width")->capture_default_str();
    segal->add_option("--k", sg_k, "nerve degree")->capture_default_str();

    // prism
    auto* prism = app.add_subcommand("prism", "prism decomposition of a homotopy");
    std::string pr_fixture = "arrow";
    prism->add_option("--fixture", pr_fixture, "identity|arrow|chain")
        ->check(CLI::IsMember({"identity", "arrow", "chain"}))
        ->capture_default_str();

    // emit
    auto* emit = app.add_subcommand("emit", "serialize built-in objects");
    emit->require_subcommand(1);
    std::string em_name = "walking-arrow", em_base = "fskel";
    auto* em_cat = emit->add_subcommand("category", "a category as JSON or DOT");
    em_cat->add_option("--name", em_name,
                       "walking-arrow|walking-iso|chain2|chain3|terminal|fskel|gstar|deltaop|estar")
        ->capture_default_str();
    auto* em_census = emit->add_subcommand("census", "hom census of a tuple category");
    em_census->add_option("--base", em_base, "base category")
        ->check(CLI::IsMember({"fskel", "deltaop"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        IndexUniverse U;

        if (app.got_subcommand(hom)) {
            Token a = parse_token(hom_from), b = parse_token(hom_to);
            if (a.kind == Token::kSkel && b.kind == Token::kSkel) {
                auto maps = enum_pointed_maps(a.n, b.n, hom_nonzero);
                if (format == "csv") {
                    std::cout << "from,to,count\n"
                              << a.n << "," << b.n << "," << maps.size() << "\n";
                } else {
                    json arr = json::array();
                    for (const auto& f : maps) arr.push_back(pointed_map_json(f));
                    print_json(json{{"from", hom_from},
                                    {"to", hom_to},
                                    {"count", maps.size()},
                                    {"maps", arr}});
                }
                return 0;
            }
            if (a.kind == Token::kTuple && b.kind == Token::kTuple) {
                int need = cfg.trunc_n;
                for (int e : a.entries) need = std::max(need, e);
                for (int e : b.entries) need = std::max(need, e);
                const SkelCat& s = U.skel(need);
                auto homs = enum_tuple_hom(skel_base(s), ObjectTuple{false, a.entries},
                                           ObjectTuple{false, b.entries}, hom_nonzero);
                if (format == "csv") {
                    std::cout << "from,to,count\n\"" << hom_from << "\",\"" << hom_to << "\","
                              << homs.size() << "\n";
                } else {
                    json arr = json::array();
                    for (const auto& h : homs) arr.push_back(tuple_arrow_json(h, s));
                    print_json(json{{"from", hom_from},
                                    {"to", hom_to},
                                    {"count", homs.size()},
                                    {"morphisms", arr}});
                }
                return 0;
            }
            if (a.kind == Token::kDeltaTuple && b.kind == Token::kDeltaTuple) {
                int need = cfg.degree;
                for (int e : a.entries) need = std::max(need, e);
                for (int e : b.entries) need = std::max(need, e);
                const DeltaOpCat& d = U.delta_op(need);
                auto to_tuple = [&](const std::vector<int>& degs) {
                    ObjectTuple t{false, {}};
                    for (int g : degs) t.entries.push_back(d.obj_of_degree(g));
                    return t;
                };
                auto homs =
                    enum_tuple_hom(delta_base(d), to_tuple(a.entries), to_tuple(b.entries),
                                   hom_nonzero);
                json arr = json::array();
                for (const auto& h : homs) arr.push_back(delta_arrow_json(h, d));
                print_json(json{{"from", hom_from},
                                {"to", hom_to},
                                {"count", homs.size()},
                                {"morphisms", arr}});
                return 0;
            }
            throw std::invalid_argument("--from and --to must name objects of the same category");
        }

        if (app.got_subcommand(smash)) {
            if (!smash_object.empty()) {
                Token t = parse_token(smash_object);
                if (t.kind == Token::kBasepoint) {
                    print_json(json{{"object", smash_object}, {"smash", pointed_set_json({0})}});
                    return 0;
                }
                if (t.kind != Token::kTuple)
                    throw std::invalid_argument("--object expects a tuple token");
                print_json(json{{"object", smash_object},
                                {"smash", pointed_set_json(smash_objects(
                                              ObjectTuple{false, t.entries}))}});
                return 0;
            }
            if (!smash_morphism.empty()) {
                json j = read_json_arg(smash_morphism);
                int need = cfg.trunc_n;
                for (const char* side : {"src", "dst"})
                    if (j.at(side).contains("entries"))
                        for (const auto& e : j.at(side).at("entries"))
                            need = std::max(need, e.get<int>());
                const SkelCat& s = U.skel(need);
                TupleArrow a = tuple_arrow_from_json(j, s);
                PointedMap m;
                if (a.zero || a.src.is_basepoint || a.dst.is_basepoint) {
                    int sn = a.src.is_basepoint ? 0 : static_cast<int>(smash_objects(a.src).size);
                    int dn = a.dst.is_basepoint ? 0 : static_cast<int>(smash_objects(a.dst).size);
                    m = zero_map(sn, dn);
                } else {
                    std::vector<PointedMap> psis;
                    for (int id : a.psis) psis.push_back(s.maps[id]);
                    m = smash_maps(a.inj, psis, a.src.entries, a.dst.entries);
                }
                print_json(json{{"smash", pointed_map_json(m)}});
                return 0;
            }
            throw std::invalid_argument("smash needs --object or --morphism");
        }

        if (app.got_subcommand(tuplecat) ||
            (app.got_subcommand(emit) && emit->got_subcommand(em_census))) {
            std::string base = app.got_subcommand(tuplecat) ? tc_base : em_base;
            const TupleCat& T = base == "fskel"
                                    ? U.gstar(cfg.trunc_n, cfg.q_max)
                                    : U.estar(capped_estar_degree(cfg.degree), cfg.q_max);
            if (format == "csv") {
                std::cout << census_csv(T);
                return 0;
            }
            auto v = validate_category(T.cat);
            print_json(json{{"validation", v.summary()}, {"census", census_json(T)}});
            return v.ok ? 0 : 1;
        }

        if (app.got_subcommand(diagram)) {
            if (diagram->got_subcommand(dg_validate)) {
                json j = read_json_file(dg_input);
                CatReport r;
                if (j.value("kind", "set") == "cat")
                    r = validate_cat_diagram(cat_diagram_from_json(j, U));
                else
                    r = validate_set_diagram(set_diagram_from_json(j, U));
                print_json(json{{"ok", r.ok}, {"problems", r.problems}});
                return r.ok ? 0 : 1;
            }
            if (diagram->got_subcommand(dg_pre)) {
                SetDiagram X = set_diagram_from_json(read_json_file(dg_input), U);
                if (dg_functor == "inclusion") {
                    const TupleCat& G = U.gstar(cfg.trunc_n, cfg.q_max);
                    if (X.index != &G.cat)
                        throw std::invalid_argument(
                            "inclusion precomposition expects a diagram over gstar:" +
                            std::to_string(cfg.trunc_n) + "," + std::to_string(cfg.q_max));
                    SetDiagram R = precompose(X, length_one_inclusion(G));
                    print_json(set_diagram_json(R, "fskel:" + std::to_string(cfg.trunc_n)));
                } else {
                    long long pw = 1;
                    for (int q = 0; q < cfg.q_max; ++q) pw *= cfg.trunc_n;
                    const SkelCat& big = U.skel(static_cast<int>(pw));
                    if (X.index != &big.cat)
                        throw std::invalid_argument(
                            "collapse precomposition expects a diagram over fskel:" +
                            std::to_string(pw));
                    const TupleCat& G = U.gstar(cfg.trunc_n, cfg.q_max);
                    SetDiagram R = precompose(X, collapse_functor(G, U.skel(cfg.trunc_n), big));
                    print_json(set_diagram_json(R, "gstar:" + std::to_string(cfg.trunc_n) + "," +
                                                       std::to_string(cfg.q_max)));
                }
                return 0;
            }
            if (diagram->got_subcommand(dg_nerve)) {
                CatDiagram X = cat_diagram_from_json(read_json_file(dg_input), U);
                NerveDiagram N = nerve_levelwise(X, cfg.degree);
                auto v = validate_nerve(N);
                json levels = json::object();
                for (int c = 0; c < X.index->num_objects(); ++c) {
                    json row = json::array();
                    for (int k = 0; k <= cfg.degree; ++k) row.push_back(N.levels[c][k].size());
                    levels[X.index->objects[c]] = row;
                }
                print_json(json{{"ok", v.ok}, {"problems", v.problems}, {"levels", levels}});
                return v.ok ? 0 : 1;
            }
            // rep
            Token t = parse_token(dg_at);
            const FinCategory* C = nullptr;
            int at = -1;
            std::string ref;
            if (t.kind == Token::kSkel) {
                if (t.n > cfg.trunc_n)
                    throw std::invalid_argument("object exceeds --trunc; raise it");
                C = &U.skel(cfg.trunc_n).cat;
                at = t.n;
                ref = "fskel:" + std::to_string(cfg.trunc_n);
            } else if (t.kind == Token::kTuple) {
                const TupleCat& G = U.gstar(cfg.trunc_n, cfg.q_max);
                C = &G.cat;
                at = G.object_id(ObjectTuple{false, t.entries});
                ref = "gstar:" + std::to_string(cfg.trunc_n) + "," + std::to_string(cfg.q_max);
            } else if (t.kind == Token::kDelta) {
                const DeltaOpCat& D = U.delta_op(cfg.degree);
                C = &D.cat;
                at = D.obj_of_degree(t.n);
                ref = "deltaop:" + std::to_string(cfg.degree);
            } else if (t.kind == Token::kDeltaTuple) {
                int d = capped_estar_degree(cfg.degree);
                const TupleCat& E = U.estar(d, cfg.q_max);
                const DeltaOpCat& D = U.delta_op(d);
                ObjectTuple tu{false, {}};
                for (int g : t.entries) tu.entries.push_back(D.obj_of_degree(g));
                C = &E.cat;
                at = E.object_id(tu);
                ref = "estar:" + std::to_string(d) + "," + std::to_string(cfg.q_max);
            } else {
                throw std::invalid_argument("cannot take a representable at the basepoint");
            }
            SetDiagram X = representable_diagram(*C, at);
            if (!dg_merge_at.empty()) {
                if (dg_merge_pair.empty())
                    throw std::invalid_argument("--merge-at needs --merge-pair");
                auto comma = dg_merge_pair.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("--merge-pair expects \"a,b\"");
                int obj = find_object(*C, dg_merge_at);
                int ea = parse_int(dg_merge_pair.substr(0, comma));
                int eb = parse_int(dg_merge_pair.substr(comma + 1));
                X = quotient_diagram(X, {{{obj, ea, eb}}}).diagram;
            }
            print_json(set_diagram_json(X, ref));
            return 0;
        }

        if (app.got_subcommand(lift)) {
            const SkelCat& s = U.skel(cfg.trunc_n);
            SetDiagram X = set_diagram_from_json(read_json_file(lf_input), U);
            if (X.index != &s.cat)
                throw std::invalid_argument("lift expects a diagram over fskel:" +
                                            std::to_string(cfg.trunc_n) +
                                            " (adjust --trunc to match the fixture)");
            const TupleCat& G = U.gstar(cfg.trunc_n, cfg.q_max);
            Functor i = length_one_inclusion(G);
            if (!lf_at.empty()) {
                Token t = parse_token(lf_at);
                int target = t.kind == Token::kBasepoint
                                 ? 0
                                 : G.object_id(ObjectTuple{false, t.entries});
                LiftLevel lvl = lift_level(X, i, target);
                json classes = json::array();
                for (int c = 1; c <= lvl.value.size; ++c) {
                    const LiftGen& g = lvl.rep(c);
                    classes.push_back(json{{"source", s.cat.objects[g.n]},
                                           {"arrow", G.cat.mor_names[g.theta]},
                                           {"element", g.x}});
                }
                print_json(json{{"object", G.cat.objects[target]},
                                {"size", lvl.value.size},
                                {"classes", classes}});
                return 0;
            }
            Lift L = lift_diagram(X, i);
            if (lf_as_diagram) {
                print_json(set_diagram_json(L.diagram, "gstar:" + std::to_string(cfg.trunc_n) +
                                                           "," + std::to_string(cfg.q_max)));
                return 0;
            }
            print_json(json{{"levels", lift_json(L)}});
            return 0;
        }

        if (app.got_subcommand(check)) {
            if (!check_category.empty()) {
                FinCategory c = category_from_json(read_json_file(check_category));
                auto r = validate_category(c);
                print_json(json{{"ok", r.ok}, {"problems", r.problems}});
                return r.ok ? 0 : 1;
            }
            for (const auto& g : check_groups) {
                const auto& names = suite_group_names();
                if (g != "all" && std::find(names.begin(), names.end(), g) == names.end())
                    throw std::invalid_argument("unknown suite group '" + g + "'");
            }
            auto t0 = std::chrono::steady_clock::now();
            CheckReport rep = run_suite(cfg, check_groups);
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::fprintf(stderr, "suite completed in %.2fs\n", dt);
            print_json(report_json(rep));
            return rep.failures() == 0 ? 0 : 1;
        }

        if (app.got_subcommand(classify) || app.got_subcommand(segal)) {
            bool is_classify = app.got_subcommand(classify);
            std::string file = is_classify ? cl_file : sg_file;
            std::string cat_name = is_classify ? cl_cat : sg_cat;
            std::string weq_name = is_classify ? cl_weq : sg_weq;
            FinCategory C = file.empty() ? named_category(cat_name)
                                         : category_from_json(read_json_file(file));
            RelativeCategory R{&C, named_weq(C, weq_name)};
            auto rv = validate_relative(R);
            if (!rv.ok) {
                print_json(json{{"ok", false}, {"problems", rv.problems}});
                return 1;
            }
            if (is_classify) {
                int n = cl_n >= 0 ? cl_n : std::min(3, cfg.degree);
                int k = cl_k >= 0 ? cl_k : std::min(3, cfg.degree);
                ClassificationDiagram CD(R, n);
                if (format == "csv") {
                    std::cout << "n,k,count\n";
                    for (int u = 0; u <= n; ++u)
                        for (int v = 0; v <= k; ++v)
                            std::cout << u << "," << v << "," << CD.level_count(u, v) << "\n";
                    return 0;
                }
                json levels = json::array();
                for (int u = 0; u <= n; ++u) {
                    json row = json::array();
                    for (int v = 0; v <= k; ++v) row.push_back(CD.level_count(u, v));
                    levels.push_back(row);
                }
                json out{{"cat", file.empty() ? cat_name : file},
                         {"weq", weq_name},
                         {"levels", levels}};
                int rc = 0;
                if (cl_verify) {
                    auto bis = check_bisimplicial_identities(CD, n, k);
                    out["bisimplicial"] = bis.summary();
                    rc = bis.ok ? 0 : 1;
                }
                print_json(out);
                return rc;
            }
            ClassificationDiagram CD(R, sg_n);
            auto s = segal_check(CD, sg_n, sg_k);
            print_json(json{{"bijective", s.bijective},
                            {"source", s.source_size},
                            {"target", s.target_size},
                            {"witness", s.witness}});
            return s.bijective ? 0 : 1;
        }

        if (app.got_subcommand(prism)) {
            PrismReport r;
            int d = std::max(2, std::min(cfg.degree, 3));
            if (pr_fixture == "identity") {
                FinCategory wa = walking_arrow();
                Functor idf = identity_functor(wa);
                NatTrans p{&idf, &idf, {wa.identities[0], wa.identities[1]}};
                r = check_prism_homotopy(p, d);
            } else if (pr_fixture == "arrow") {
                FinCategory wa = walking_arrow();
                FinCategory pt = terminal_category();
                Functor F{&pt, &wa, {0}, {wa.identities[0]}};
                Functor G{&pt, &wa, {1}, {wa.identities[1]}};
                NatTrans p{&F, &G, {wa.hom[0][1][0]}};
                r = check_prism_homotopy(p, d);
            } else {
                FinCategory ch = chain_category(2);
                Functor F = identity_functor(ch);
                Functor G{&ch, &ch, {}, {}};
                G.on_obj.assign(ch.num_objects(), ch.num_objects() - 1);
                G.on_mor.assign(ch.num_morphisms(), ch.identities[ch.num_objects() - 1]);
                NatTrans p{&F, &G, {}};
                for (int x = 0; x < ch.num_objects(); ++x)
                    p.components.push_back(ch.hom[x][ch.num_objects() - 1].at(0));
                r = check_prism_homotopy(p, d);
            }
            print_json(json{{"ok", r.ok}, {"constant", r.constant}, {"witness", r.witness}});
            return r.ok ? 0 : 1;
        }

        if (app.got_subcommand(emit) && emit->got_subcommand(em_cat)) {
            const FinCategory* C = nullptr;
            FinCategory owned;
            if (em_name == "fskel") {
                C = &U.skel(cfg.trunc_n).cat;
            } else if (em_name == "gstar") {
                C = &U.gstar(cfg.trunc_n, cfg.q_max).cat;
            } else if (em_name == "deltaop") {
                C = &U.delta_op(cfg.degree).cat;
            } else if (em_name == "estar") {
                C = &U.estar(capped_estar_degree(cfg.degree), cfg.q_max).cat;
            } else {
                owned = named_category(em_name);
                C = &owned;
            }
            if (format == "dot")
                std::cout << dot_of_category(*C, em_name);
            else
                print_json(category_json(*C));
            return 0;
        }

        throw std::invalid_argument("no subcommand handled");
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
