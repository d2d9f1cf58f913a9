#include "hdts/colimits.hpp"

#include "hdts/builders.hpp"
#include "hdts/corpus.hpp"
#include "hdts/iso.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hdts;

TEST_CASE("coproducts") {
    CoproductResult empty = coproduct({});
    CHECK(empty.system.empty());

    TransitionSystem c2 = cube({"u", "v"});
    TransitionSystem c3 = cube({"u", "v", "w"});
    CoproductResult sum = coproduct({c2, c3});
    CHECK(sum.system.transitions().size() ==
          c2.transitions().size() + c3.transitions().size());
    CHECK(sum.system.state_count() == c2.state_count() + c3.state_count());
    CHECK(classify(sum.system).system_class == SystemClass::cattani_sassone);
    for (const TSMap& in : sum.injections) CHECK(is_mono(in));
}

TEST_CASE("pushout along an identity is the other leg") {
    TransitionSystem a = cube({"u"});
    TransitionSystem b = cube({"u", "v"});
    // Include the interval as the bottom edge of the square.
    TSMap g = TSMap::by_names(a, b, {{"0", "00"}, {"1", "10"}}, {{"u1", "u1"}});
    PushoutResult p = pushout(TSMap::identity(a), g);
    CHECK(isomorphic(p.system, b));
    CHECK(p.from_b.onto_transitions());
}

TEST_CASE("figure five: both pushouts reproduce the depicted systems") {
    PointedTS puv = path({"u", "v"});
    PointedTS puvw = path({"u", "v", "w"});
    TSMap extend = TSMap::by_names(puv.ts, puvw.ts, {{"0", "0"}, {"1", "1"}, {"2", "2"}},
                                   {{"u1", "u1"}, {"v2", "v2"}});

    PointedTS tl = corpus::fig5_tl();
    TSMap top_branch = TSMap::by_names(puv.ts, tl.ts, {{"0", "*"}, {"1", "p1"}, {"2", "p2"}},
                                       {{"u1", "u"}, {"v2", "v1"}});
    PointedPushoutResult top = pointed_pushout(puv, tl, puvw, top_branch, extend);
    CHECK(top.system.ts.state_count() == 6);
    CHECK(isomorphic(top.system, corpus::fig5_tr()));

    PointedTS bl = corpus::fig5_bl();
    TSMap bl_branch = TSMap::by_names(puv.ts, bl.ts, {{"0", "*"}, {"1", "b1"}, {"2", "m"}},
                                      {{"u1", "u"}, {"v2", "v1"}});
    PointedPushoutResult bottom = pointed_pushout(puv, bl, puvw, bl_branch, extend);
    CHECK(bottom.system.ts.state_count() == 5);
    CHECK(isomorphic(bottom.system, corpus::fig5_br()));

    // The full square: pushing the left vertical map along the top
    // horizontal one yields the bottom-right corner as well.
    PointedPushoutResult square = pointed_pushout(tl, top.system, bl, top.from_x, corpus::fig5_left());
    CHECK(isomorphic(square.system, corpus::fig5_br()));
}

TEST_CASE("wedges") {
    PointedTS pu = path({"u"});
    PointedCoproductResult w = wedge({pu, pu});
    CHECK(w.system.ts.state_count() == 3);
    CHECK(w.system.ts.action_count() == 2);
    for (const auto& a : w.system.ts.actions()) CHECK(a.label == "u");

    PointedTS point(discrete({"p"}), "p");
    PointedCoproductResult single = wedge({pu, point});
    CHECK(isomorphic(single.system, pu));

    // Wedging two copies of the uv-path gives the figure-2 shape but with
    // four distinct actions: a wedge cannot share actions across its legs.
    PointedCoproductResult tree = wedge({path({"u", "v"}), path({"u", "v"})});
    CHECK(tree.system.ts.state_count() == 5);
    CHECK(tree.system.ts.action_count() == 4);
    CHECK(tree.system.ts.transitions().size() == corpus::fig2().ts.transitions().size());
    CHECK(!isomorphic(tree.system, corpus::fig2()));  // fig2 shares its u-action
}

TEST_CASE("wedge base merges can force action identifications") {
    // Loops at both bases with one label collide after the wedge.
    TransitionSystem loop1 = make_ts({"s"}, {{"u", "x"}}, {{"s", {"u"}, "s"}});
    PointedTS p1(loop1, "s");
    PointedCoproductResult w = wedge({p1, p1});
    CHECK(w.system.ts.state_count() == 1);
    CHECK(w.system.ts.action_count() == 1);
}

TEST_CASE("colimit law on random pushouts") {
    std::mt19937 rng(29);
    int done = 0;
    while (done < 200) {
        TransitionSystem a = support::random_cs(rng, 3);
        TransitionSystem x = support::random_cs(rng, 3);
        TransitionSystem b = support::random_cs(rng, 3);
        auto fs = support::enumerate_homs(a, x);
        auto gs = support::enumerate_homs(a, b);
        if (fs.empty() || gs.empty()) continue;
        std::uniform_int_distribution<std::size_t> pf(0, fs.size() - 1), pg(0, gs.size() - 1);
        const TSMap& f = fs[pf(rng)];
        const TSMap& g = gs[pg(rng)];
        // pushout() itself asserts the union law; also check the
        // onto-propagation corollary here.
        PushoutResult p = pushout(f, g);
        if (g.onto_states() && g.onto_actions() && g.onto_transitions()) {
            CHECK(p.from_x.onto_states());
            CHECK(p.from_x.onto_actions());
            CHECK(p.from_x.onto_transitions());
        }
        ++done;
    }
}

TEST_CASE("pushout universal property at desk scale") {
    std::mt19937 rng(31);
    std::vector<TransitionSystem> targets = {cube({"a"}), double_transition("b"),
                                             discrete({"w1", "w2"})};
    int done = 0;
    while (done < 10) {
        TransitionSystem a = support::random_cs(rng, 2);
        TransitionSystem x = support::random_cs(rng, 2);
        TransitionSystem b = support::random_cs(rng, 2);
        auto fs = support::enumerate_homs(a, x);
        auto gs = support::enumerate_homs(a, b);
        if (fs.empty() || gs.empty()) continue;
        const TSMap& f = fs.front();
        const TSMap& g = gs.front();
        PushoutResult p = pushout(f, g);
        for (const TransitionSystem& w : targets) {
            auto from_x = support::enumerate_homs(x, w);
            auto from_b = support::enumerate_homs(b, w);
            auto from_apex = support::enumerate_homs(p.system, w);
            for (const TSMap& px : from_x) {
                for (const TSMap& pb : from_b) {
                    if (!(f.then(px) == g.then(pb))) continue;  // not a cocone
                    std::size_t mediating = 0;
                    for (const TSMap& h : from_apex)
                        if (p.from_x.then(h) == px && p.from_b.then(h) == pb) ++mediating;
                    CHECK(mediating == 1);
                }
            }
        }
        ++done;
    }
}
