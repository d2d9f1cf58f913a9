#include "hdts/reflections.hpp"

#include "hdts/builders.hpp"
#include "hdts/iso.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hdts;

namespace {

TransitionSystem two_intermediates() {
    return make_ts({"a", "c", "c2", "d", "e"}, {{"u", "x"}, {"v", "y"}},
                   {{"a", {"u", "v"}, "d"},
                    {"a", {"v", "u"}, "d"},
                    {"a", {"u"}, "c"},
                    {"c", {"v"}, "d"},
                    {"a", {"u"}, "c2"},
                    {"c2", {"v"}, "d"},
                    {"a", {"v"}, "e"},
                    {"e", {"u"}, "d"}});
}

// Reference implementation: merge one violating pair at a time.
TransitionSystem csa2_one_at_a_time(const TransitionSystem& ts) {
    TransitionSystem cur = ts;
    for (;;) {
        auto violations = check_csa2(cur);
        if (violations.empty()) return cur;
        Partition states(cur.state_count());
        states.merge(violations.front().nu1, violations.front().nu2);
        cur = quotient(cur, states, Partition(cur.action_count())).system;
    }
}

} // namespace

TEST_CASE("csa2 reflection") {
    Reflection r = csa2_reflect(two_intermediates());
    CHECK(check_csa2(r.system).empty());
    CHECK(r.system.state_count() == 4);  // c and c2 merged
    CHECK(r.unit.onto_states());

    CHECK(csa2_reflect(cube({"u", "v", "w"})).system == cube({"u", "v", "w"}));
    CHECK_THROWS_AS(csa2_reflect(pure_transition({"u", "v"})), std::invalid_argument);
}

TEST_CASE("csa2 reflection is merge-order independent") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        TransitionSystem ts = support::random_cubical(rng);
        REQUIRE(classify(ts).system_class >= SystemClass::cubical);
        TransitionSystem batch = csa2_reflect(ts).system;
        TransitionSystem stepwise = csa2_one_at_a_time(ts);
        CHECK(isomorphic(batch, stepwise));
    }
}

TEST_CASE("csa1 reflection") {
    TransitionSystem parallel = make_ts({"a", "b"}, {{"u", "x"}, {"v", "x"}},
                                        {{"a", {"u"}, "b"}, {"a", {"v"}, "b"}});
    Reflection r = csa1_reflect(parallel);
    CHECK(r.system.action_count() == 1);
    CHECK(check_csa1(r.system).empty());
    CHECK(r.unit.onto_actions());
    CHECK(r.unit.onto_states());
    CHECK(r.unit.src().state_count() == r.system.state_count());  // bijective on states

    CHECK(csa1_reflect(double_transition("x")).system == double_transition("x"));
    CHECK_THROWS_AS(csa1_reflect(pure_transition({"u", "v"})), std::invalid_argument);
}

TEST_CASE("collapse then reflect agrees for the double transition and the interval") {
    auto collapse_to_point = [](const TransitionSystem& ts) {
        Partition states(ts.state_count());
        for (StateId s = 1; s < ts.state_count(); ++s) states.merge(0, s);
        QuotientResult q = quotient(ts, states, Partition(ts.action_count()));
        return cs_reflect(q.system).system;
    };
    CHECK(isomorphic(collapse_to_point(double_transition("x")), collapse_to_point(cube({"x"}))));
}

TEST_CASE("cs reflection") {
    TransitionSystem c2 = cube({"u", "v"});
    CHECK(cs_reflect(c2).system == c2);

    // The raw cylinder over a cube with a repeated label merges both
    // states and actions on the way to the Cattani-Sassone quotient.
    TransitionSystem raw = oracles::raw_cylinder(cube({"x", "x"}));
    Reflection r = cs_reflect(raw);
    CHECK(!is_mono(r.unit));
    std::set<StateId> state_image(r.unit.state_map().begin(), r.unit.state_map().end());
    CHECK(state_image.size() < raw.state_count());
    std::set<ActionId> action_image(r.unit.action_map().begin(), r.unit.action_map().end());
    CHECK(action_image.size() < raw.action_count());

    CHECK_THROWS_AS(cs_reflect(pure_transition({"u", "v"})), std::invalid_argument);
}

TEST_CASE("an action merge can re-expose an intermediate clash") {
    // Regular system: two squares over c..d whose first legs carry the
    // parallel actions u,v (equal label), plus a shared mirror path.
    // Merging u and v makes m1 and m2 intermediates of one square, so the
    // joint reflection has to run another state-merging pass.
    TransitionSystem ts = make_ts(
        {"a", "b", "c", "d", "m1", "m2", "n"}, {{"u", "x"}, {"v", "x"}, {"w", "y"}},
        {{"a", {"u"}, "b"},
         {"a", {"v"}, "b"},
         {"c", {"u"}, "m1"},
         {"m1", {"w"}, "d"},
         {"c", {"v"}, "m2"},
         {"m2", {"w"}, "d"},
         {"c", {"w"}, "n"},
         {"n", {"u"}, "d"},
         {"n", {"v"}, "d"},
         {"c", {"u", "w"}, "d"},
         {"c", {"w", "u"}, "d"},
         {"c", {"v", "w"}, "d"},
         {"c", {"w", "v"}, "d"}});
    REQUIRE(classify(ts).system_class == SystemClass::regular);

    Reflection partial = csa1_reflect(ts);
    CHECK(check_csa1(partial.system).empty());
    CHECK(!check_csa2(partial.system).empty());  // the clash the action merge creates

    Reflection full = cs_reflect(ts);
    CHECK(classify(full.system).system_class == SystemClass::cattani_sassone);
    CHECK(full.system.state_count() == 6);  // m1 and m2 identified
    CHECK(full.system.action_count() == 2);
}

TEST_CASE("cs reflection output satisfies every axiom and is idempotent") {
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        TransitionSystem ts = support::random_cubical(rng);
        Reflection r = cs_reflect(ts);
        Classification c = classify(r.system);
        CHECK(c.system_class == SystemClass::cattani_sassone);
        CHECK(c.multiset);
        CHECK(c.patching);
        CHECK(c.all_actions_used);
        CHECK(c.intermediate_state);
        CHECK(c.csa2);
        CHECK(c.csa1);
        CHECK(cs_reflect(r.system).system == r.system);
        CHECK(r.unit.onto_states());
        CHECK(r.unit.onto_actions());
        CHECK(r.unit.onto_transitions());
    }
}

TEST_CASE("universal property of the cs reflection at desk scale") {
    std::mt19937 rng(23);
    std::vector<TransitionSystem> targets = {cube({"a"}), cube({"a", "b"}), double_transition("a"),
                                             discrete({"p", "q"})};
    for (int i = 0; i < 15; ++i) {
        TransitionSystem ts = support::random_cubical(rng, 3);
        Reflection r = cs_reflect(ts);
        for (const TransitionSystem& z : targets) {
            if (classify(z).system_class != SystemClass::cattani_sassone) continue;
            auto below = support::enumerate_homs(ts, z);
            auto above = support::enumerate_homs(r.system, z);
            // Precomposition with the unit is a bijection Hom(R ts, Z) -> Hom(ts, Z).
            CHECK(below.size() == above.size());
            for (const TSMap& f : below) {
                std::size_t factorizations = 0;
                for (const TSMap& h : above)
                    if (r.unit.then(h) == f) ++factorizations;
                CHECK(factorizations == 1);
            }
        }
    }
}
