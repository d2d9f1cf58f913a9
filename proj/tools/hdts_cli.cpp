// Command-line front end: text-format files in, verdicts and rendered
// systems out. Boolean verdicts use the exit code (0 yes, 1 no); real
// failures exit with 2 or more.

#include "hdts/bisim.hpp"
#include "hdts/builders.hpp"
#include "hdts/colimits.hpp"
#include "hdts/corpus.hpp"
#include "hdts/dot.hpp"
#include "hdts/homotopy.hpp"
#include "hdts/io.hpp"
#include "hdts/iso.hpp"
#include "hdts/reflections.hpp"
#include "hdts/similarity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace hdts;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Document load(const std::string& path) { return parse(slurp(path)); }

const NamedSystem& pick_system(const Document& doc, const std::string& name) {
    if (name.empty()) return doc.only_system();
    return doc.system(name);
}

const NamedMap& pick_map(const Document& doc, const std::string& name) {
    if (name.empty()) return doc.only_map();
    return doc.map(name);
}

json system_json(const TransitionSystem& ts, const std::string& name,
                 const std::optional<std::string>& base) {
    json j;
    j["name"] = name;
    j["states"] = ts.states();
    j["actions"] = json::array();
    for (const auto& a : ts.actions()) j["actions"].push_back({{"id", a.name}, {"label", a.label}});
    j["transitions"] = json::array();
    for (const Transition& t : ts.transitions()) {
        json names = json::array();
        for (ActionId a : t.actions) names.push_back(ts.action_name(a));
        j["transitions"].push_back(
            {{"src", ts.state_name(t.src)}, {"actions", names}, {"dst", ts.state_name(t.dst)}});
    }
    if (base) j["base"] = *base;
    return j;
}

json map_json(const TSMap& m, const std::string& name) {
    json j;
    j["name"] = name;
    json states = json::object();
    for (StateId s = 0; s < m.src().state_count(); ++s)
        states[m.src().state_name(s)] = m.dst().state_name(m.on_state(s));
    json actions = json::object();
    for (ActionId a = 0; a < m.src().action_count(); ++a)
        actions[m.src().action_name(a)] = m.dst().action_name(m.on_action(a));
    j["states"] = states;
    j["actions"] = actions;
    return j;
}

json transition_json(const TransitionSystem& ts, const Transition& t) {
    json names = json::array();
    for (ActionId a : t.actions) names.push_back(ts.action_name(a));
    return {{"src", ts.state_name(t.src)}, {"actions", names}, {"dst", ts.state_name(t.dst)}};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string transition_text(const TransitionSystem& ts, const Transition& t) {
    std::string out = ts.state_name(t.src) + " [";
    for (ActionId a : t.actions) out += " " + ts.action_name(a);
    out += " ] " + ts.state_name(t.dst);
    return out;
}

struct Options {
    bool json_out = false;
};

int run(int argc, char** argv) {
    CLI::App app{"finite higher-dimensional transition systems: axioms, closures, reflections,\n"
                 "colimits, cylinders/paths, past-similarity, reduction and bisimilarity"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json_out, "emit structured JSON on stdout");

    int verdict = 0;  // set by boolean subcommands

    // classify FILE
    std::string cl_file, cl_name;
    auto* cl = app.add_subcommand("classify", "axiom record and class of a system");
    cl->add_option("file", cl_file)->required();
    cl->add_option("--name", cl_name, "block to use when the file has several");
    cl->callback([&] {
        Document doc = load(cl_file);
        const NamedSystem& s = pick_system(doc, cl_name);
        Classification c = classify(s.system);
        json j{{"multiset", c.multiset},
               {"patching", c.patching},
               {"all_actions_used", c.all_actions_used},
               {"intermediate_state", c.intermediate_state},
               {"csa2", c.csa2},
               {"csa1", c.csa1},
               {"class", to_string(c.system_class)}};
        std::ostringstream out;
        out << "class: " << to_string(c.system_class) << "\n"
            << "multiset: " << (c.multiset ? "yes" : "no") << "\n"
            << "patching: " << (c.patching ? "yes" : "no") << "\n"
            << "all actions used: " << (c.all_actions_used ? "yes" : "no") << "\n"
            << "intermediate state: " << (c.intermediate_state ? "yes" : "no") << "\n"
            << "csa2: " << (c.csa2 ? "yes" : "no") << "\n"
            << "csa1: " << (c.csa1 ? "yes" : "no") << "\n";
        emit(opt.json_out, j, out.str());
    });

    // build KIND ARGS...
    std::string b_kind;
    std::vector<std::string> b_args;
    auto* bd = app.add_subcommand("build", "construct a standard object");
    bd->add_option("kind", b_kind, "cube|boundary|pure|double|path|cw")->required();
    bd->add_option("labels", b_args, "label arguments");
    bd->callback([&] {
        if (b_kind == "cube") {
            TransitionSystem ts = cube(b_args);
            emit(opt.json_out, system_json(ts, "cube", std::nullopt), render(ts, "cube"));
        } else if (b_kind == "boundary") {
            TransitionSystem ts = boundary(b_args);
            emit(opt.json_out, system_json(ts, "boundary", std::nullopt), render(ts, "boundary"));
        } else if (b_kind == "pure") {
            TransitionSystem ts = pure_transition(b_args);
            emit(opt.json_out, system_json(ts, "pure", std::nullopt), render(ts, "pure"));
        } else if (b_kind == "double") {
            if (b_args.size() != 1) throw std::invalid_argument("double takes exactly one label");
            TransitionSystem ts = double_transition(b_args[0]);
            emit(opt.json_out, system_json(ts, "double", std::nullopt), render(ts, "double"));
        } else if (b_kind == "path") {
            PointedTS p = path(b_args);
            emit(opt.json_out, system_json(p.ts, "path", p.base_name()), render(p, "path"));
        } else if (b_kind == "cw") {
            PointedTS p = collapsed_cylinder_path(b_args);
            emit(opt.json_out, system_json(p.ts, "cw", p.base_name()), render(p, "cw"));
        } else {
            throw std::invalid_argument("unknown build kind '" + b_kind + "'");
        }
    });

    // close FILE
    std::string close_file, close_name;
    auto* cls = app.add_subcommand("close", "multiset+patching closure of the transition set");
    cls->add_option("file", close_file)->required();
    cls->add_option("--name", close_name);
    cls->callback([&] {
        Document doc = load(close_file);
        const NamedSystem& s = pick_system(doc, close_name);
        TsBuilder b;
        for (const auto& st : s.system.states()) b.state(st);
        for (const auto& a : s.system.actions()) b.action(a.name, a.label);
        for (const Transition& t : axiom_closure(s.system.transitions()))
            b.transition(t.src, t.actions, t.dst);
        TransitionSystem closed = b.build();
        emit(opt.json_out, system_json(closed, s.name, s.base), render(closed, s.name));
    });

    // reflect KIND FILE
    std::string rf_kind, rf_file, rf_name;
    auto* rf = app.add_subcommand("reflect", "csa1, csa2 or full Cattani-Sassone reflection");
    rf->add_option("kind", rf_kind, "csa1|csa2|cs")->required();
    rf->add_option("file", rf_file)->required();
    rf->add_option("--name", rf_name);
    rf->callback([&] {
        Document doc = load(rf_file);
        const NamedSystem& s = pick_system(doc, rf_name);
        Reflection r = rf_kind == "csa1"   ? csa1_reflect(s.system)
                       : rf_kind == "csa2" ? csa2_reflect(s.system)
                       : rf_kind == "cs"   ? cs_reflect(s.system)
                                           : throw std::invalid_argument("unknown reflection '" + rf_kind + "'");
        json j{{"system", system_json(r.system, s.name + "_" + rf_kind, std::nullopt)},
               {"unit", map_json(r.unit, "unit")}};
        emit(opt.json_out, j,
             render(s.system, s.name) + "\n" + render(r.system, s.name + "_" + rf_kind) + "\n" +
                 render(r.unit, "unit", s.name, s.name + "_" + rf_kind));
    });

    // pushout F G
    std::string po_f, po_g;
    auto* po = app.add_subcommand("pushout", "pushout of two maps sharing their domain");
    po->add_option("f", po_f, "map file A -> X")->required();
    po->add_option("g", po_g, "map file A -> B")->required();
    po->callback([&] {
        Document fdoc = load(po_f);
        Document gdoc = load(po_g);
        const NamedMap& f = fdoc.only_map();
        const NamedMap& g = gdoc.only_map();
        PushoutResult r = pushout(f.map, g.map);
        json j{{"system", system_json(r.system, "pushout", std::nullopt)},
               {"from_x", map_json(r.from_x, "from_x")},
               {"from_b", map_json(r.from_b, "from_b")}};
        emit(opt.json_out, j,
             render(f.map.dst(), f.dst_name) + "\n" + render(g.map.dst(), g.dst_name) + "\n" +
                 render(r.system, "pushout") + "\n" +
                 render(r.from_x, "from_x", f.dst_name, "pushout") + "\n" +
                 render(r.from_b, "from_b", g.dst_name, "pushout"));
    });

    // coproduct FILES...
    std::vector<std::string> cp_files;
    auto* cp = app.add_subcommand("coproduct", "disjoint union of systems");
    cp->add_option("files", cp_files)->expected(-1);
    cp->callback([&] {
        std::vector<TransitionSystem> parts;
        for (const auto& f : cp_files) {
            Document doc = load(f);
            parts.push_back(doc.only_system().system);
        }
        CoproductResult r = coproduct(parts);
        json j{{"system", system_json(r.system, "coproduct", std::nullopt)}};
        emit(opt.json_out, j, render(r.system, "coproduct"));
    });

    // cyl FILE [--pointed]
    std::string cy_file, cy_name;
    bool cy_pointed = false;
    auto* cy = app.add_subcommand("cyl", "cylinder of a Cattani-Sassone system");
    cy->add_option("file", cy_file)->required();
    cy->add_option("--name", cy_name);
    cy->add_flag("--pointed", cy_pointed, "treat the base state as internal");
    cy->callback([&] {
        Document doc = load(cy_file);
        const NamedSystem& s = pick_system(doc, cy_name);
        if (cy_pointed) {
            PointedCylinderResult r = cyl_pointed(s.pointed());
            json j{{"system", system_json(r.cyl.ts, s.name + "_cyl", r.cyl.base_name())},
                   {"gamma0", map_json(r.gamma0, "gamma0")},
                   {"gamma1", map_json(r.gamma1, "gamma1")},
                   {"sigma", map_json(r.sigma, "sigma")}};
            emit(opt.json_out, j, render(r.cyl, s.name + "_cyl"));
        } else {
            CylinderResult r = cyl_csts(s.system);
            json j{{"system", system_json(r.cyl, s.name + "_cyl", std::nullopt)},
                   {"gamma0", map_json(r.gamma0, "gamma0")},
                   {"gamma1", map_json(r.gamma1, "gamma1")},
                   {"sigma", map_json(r.sigma, "sigma")}};
            emit(opt.json_out, j, render(r.cyl, s.name + "_cyl"));
        }
    });

    // cocyl FILE [--star]
    std::string cc_file, cc_name;
    bool cc_star = false;
    auto* cc = app.add_subcommand("cocyl", "path object of a Cattani-Sassone system");
    cc->add_option("file", cc_file)->required();
    cc->add_option("--name", cc_name);
    cc->add_flag("--star", cc_star, "star-shaped variant (reachable pairs only)");
    cc->callback([&] {
        Document doc = load(cc_file);
        const NamedSystem& s = pick_system(doc, cc_name);
        if (cc_star) {
            PointedPathResult r = cocyl_star(s.pointed());
            json j{{"system", system_json(r.cocyl.ts, s.name + "_cocyl", r.cocyl.base_name())},
                   {"tau", map_json(r.tau, "tau")},
                   {"pi0", map_json(r.pi0, "pi0")},
                   {"pi1", map_json(r.pi1, "pi1")}};
            emit(opt.json_out, j, render(r.cocyl, s.name + "_cocyl"));
        } else {
            PathResult r = cocyl_csts(s.system);
            json j{{"system", system_json(r.cocyl, s.name + "_cocyl", std::nullopt)},
                   {"tau", map_json(r.tau, "tau")},
                   {"pi0", map_json(r.pi0, "pi0")},
                   {"pi1", map_json(r.pi1, "pi1")}};
            emit(opt.json_out, j, render(r.cocyl, s.name + "_cocyl"));
        }
    });

    // internal FILE
    std::string in_file, in_name;
    auto* iv = app.add_subcommand("internal", "internal states of a system");
    iv->add_option("file", in_file)->required();
    iv->add_option("--name", in_name);
    iv->callback([&] {
        Document doc = load(in_file);
        const NamedSystem& s = pick_system(doc, in_name);
        json names = json::array();
        std::string text;
        for (StateId st : internal_states(s.system)) {
            names.push_back(s.system.state_name(st));
            text += s.system.state_name(st) + "\n";
        }
        emit(opt.json_out, json{{"internal", names}}, text);
    });

    // pastsim FILE
    std::string ps_file, ps_name;
    auto* ps = app.add_subcommand("pastsim", "past-similarity relation of a star-shaped system");
    ps->add_option("file", ps_file)->required();
    ps->add_option("--name", ps_name);
    ps->callback([&] {
        Document doc = load(ps_file);
        const NamedSystem& s = pick_system(doc, ps_name);
        PointedTS p = s.pointed();
        StateRelation rel = past_similar(p);
        json pairs = json::array();
        std::string text;
        for (const auto& [a, b] : rel.pairs) {
            pairs.push_back({p.ts.state_name(a), p.ts.state_name(b)});
            text += p.ts.state_name(a) + " ~ " + p.ts.state_name(b) + "\n";
        }
        emit(opt.json_out, json{{"pairs", pairs}}, text);
    });

    // fibrant FILE
    std::string fb_file, fb_name;
    auto* fb = app.add_subcommand("fibrant", "transition set closed under past-similarity?");
    fb->add_option("file", fb_file)->required();
    fb->add_option("--name", fb_name);
    fb->callback([&] {
        Document doc = load(fb_file);
        const NamedSystem& s = pick_system(doc, fb_name);
        PointedTS p = s.pointed();
        FibrancyResult r = is_fibrant(p);
        json j{{"fibrant", r.fibrant}};
        std::string text = r.fibrant ? "fibrant\n" : "not fibrant\n";
        if (r.witness) {
            j["witness"] = {{"transition", transition_json(p.ts, r.witness->transition)},
                            {"gamma", p.ts.state_name(r.witness->gamma)},
                            {"delta", p.ts.state_name(r.witness->delta)},
                            {"missing", transition_json(p.ts, r.witness->missing)}};
            text += "missing: " + transition_text(p.ts, r.witness->missing) + "\n";
        }
        emit(opt.json_out, j, text);
        verdict = r.fibrant ? 0 : 1;
    });

    // reduced FILE
    std::string rd_file, rd_name;
    auto* rd = app.add_subcommand("reduced", "is past-similarity the diagonal?");
    rd->add_option("file", rd_file)->required();
    rd->add_option("--name", rd_name);
    rd->callback([&] {
        Document doc = load(rd_file);
        const NamedSystem& s = pick_system(doc, rd_name);
        bool r = is_reduced(s.pointed());
        emit(opt.json_out, json{{"reduced", r}}, r ? "reduced\n" : "not reduced\n");
        verdict = r ? 0 : 1;
    });

    // reduce FILE
    std::string rr_file, rr_name;
    auto* rr = app.add_subcommand("reduce", "reduction fixpoint of a star-shaped system");
    rr->add_option("file", rr_file)->required();
    rr->add_option("--name", rr_name);
    rr->callback([&] {
        Document doc = load(rr_file);
        const NamedSystem& s = pick_system(doc, rr_name);
        ReduceResult r = reduce(s.pointed());
        json j{{"system", system_json(r.system.ts, s.name + "_reduced", r.system.base_name())},
               {"unit", map_json(r.unit, "unit")}};
        emit(opt.json_out, j,
             render(s.pointed(), s.name) + "\n" + render(r.system, s.name + "_reduced") + "\n" +
                 render(r.unit, "unit", s.name, s.name + "_reduced"));
    });

    // weq MAPFILE [--star]
    std::string wq_file, wq_name;
    bool wq_star = false;
    auto* wq = app.add_subcommand("weq", "is the map a weak equivalence?");
    wq->add_option("mapfile", wq_file)->required();
    wq->add_option("--name", wq_name);
    wq->add_flag("--star", wq_star, "star-shaped criterion (reduction instead of collapse)");
    wq->callback([&] {
        Document doc = load(wq_file);
        const NamedMap& m = pick_map(doc, wq_name);
        bool r;
        if (wq_star) {
            PointedTS x = doc.system(m.src_name).pointed();
            PointedTS y = doc.system(m.dst_name).pointed();
            r = is_weak_equivalence_star(x, y, m.map);
        } else {
            r = is_weak_equivalence_csts(m.map);
        }
        emit(opt.json_out, json{{"weak_equivalence", r}},
             r ? "weak equivalence\n" : "not a weak equivalence\n");
        verdict = r ? 0 : 1;
    });

    // pinj MAPFILE
    std::string pj_file, pj_name;
    auto* pj = app.add_subcommand("pinj", "does the map lift all path extensions?");
    pj->add_option("mapfile", pj_file)->required();
    pj->add_option("--name", pj_name);
    pj->callback([&] {
        Document doc = load(pj_file);
        const NamedMap& m = pick_map(doc, pj_name);
        PointedTS x = doc.system(m.src_name).pointed();
        PointedTS y = doc.system(m.dst_name).pointed();
        PInjResult r = is_p_injective(x, y, m.map);
        json j{{"p_injective", r.p_injective}};
        std::string text = r.p_injective ? "P-injective\n" : "not P-injective\n";
        if (r.witness) {
            j["witness"] = {{"word", r.witness->word},
                            {"extension", r.witness->word + r.witness->extension},
                            {"state", x.ts.state_name(r.witness->state)}};
            text += "witness: path '" + r.witness->word + "' cannot be extended to '" +
                    r.witness->word + r.witness->extension + "'\n";
        }
        emit(opt.json_out, j, text);
        verdict = r.p_injective ? 0 : 1;
    });

    // bisim FILE FILE
    std::string bs_p, bs_q, bs_pname, bs_qname;
    auto* bs = app.add_subcommand("bisim", "strong bisimilarity of two star-shaped systems");
    bs->add_option("p", bs_p)->required();
    bs->add_option("q", bs_q)->required();
    bs->add_option("--name-p", bs_pname);
    bs->add_option("--name-q", bs_qname);
    bs->callback([&] {
        Document pdoc = load(bs_p);
        Document qdoc = load(bs_q);
        PointedTS p = pick_system(pdoc, bs_pname).pointed();
        PointedTS q = pick_system(qdoc, bs_qname).pointed();
        auto r = strong_bisimilar(p, q);
        json j{{"bisimilar", r.has_value()}};
        std::string text = r ? "bisimilar\n" : "not bisimilar\n";
        if (r) {
            auto span = p_bisimilar_via_span(p, q);
            json pairs = json::array();
            for (const auto& [a, b] : r->relation)
                pairs.push_back({p.ts.state_name(a), q.ts.state_name(b)});
            j["relation"] = pairs;
            if (span) j["span"] = system_json(span->z.ts, "span", span->z.base_name());
        }
        emit(opt.json_out, j, text);
        verdict = r ? 0 : 1;
    });

    // dot FILE
    std::string dt_file, dt_name;
    auto* dt = app.add_subcommand("dot", "Graphviz export");
    dt->add_option("file", dt_file)->required();
    dt->add_option("--name", dt_name);
    dt->callback([&] {
        Document doc = load(dt_file);
        const NamedSystem& s = pick_system(doc, dt_name);
        std::optional<StateId> base;
        if (s.base) base = s.system.state_id(*s.base);
        std::string text = export_dot(s.system, s.name, base);
        emit(opt.json_out, json{{"dot", text}}, text);
    });

    // examples NAME
    std::string ex_name;
    auto* ex = app.add_subcommand("examples", "emit a bundled example file");
    ex->add_option("name", ex_name, "fig1|fig2|fig3|fig4|fig5a|fig5b|m0|m1|erratum")->required();
    ex->callback([&] {
        std::string text = corpus::text(ex_name);
        emit(opt.json_out, json{{"name", ex_name}, {"text", text}}, text);
    });

    CLI11_PARSE(app, argc, argv);
    return verdict;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
