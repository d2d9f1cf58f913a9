#include "hdts/colimits.hpp"

namespace hdts {

namespace {

std::string suffixed(const std::string& name, std::size_t k) {
    return name + "." + std::to_string(k + 1);
}

void require_cs_input(const TransitionSystem& ts, const char* what) {
    if (classify(ts).system_class != SystemClass::cattani_sassone)
        throw std::invalid_argument(std::string(what) + " expects Cattani-Sassone inputs");
}

// Colimit union law: the apex's transitions are exactly
// the images of the legs' transitions.
void assert_union_law(const TransitionSystem& apex, const std::vector<const TSMap*>& legs) {
    std::set<Transition> images;
    for (const TSMap* leg : legs)
        for (const Transition& t : leg->src().transitions()) images.insert(leg->image(t));
    if (images != apex.transitions())
        throw std::logic_error("colimit law violated: apex transitions are not the union of images");
}

} // namespace

CoproductResult coproduct(const std::vector<TransitionSystem>& parts) {
    TsBuilder b;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const TransitionSystem& p = parts[k];
        for (const auto& s : p.states()) b.state(suffixed(s, k));
        for (const auto& a : p.actions()) b.action(suffixed(a.name, k), a.label);
        for (const Transition& t : p.transitions()) {
            std::vector<ActionId> acts;
            acts.reserve(t.actions.size());
            for (ActionId a : t.actions) acts.push_back(b.action_of(suffixed(p.action_name(a), k)));
            b.transition(b.state_of(suffixed(p.state_name(t.src), k)), std::move(acts),
                         b.state_of(suffixed(p.state_name(t.dst), k)));
        }
    }
    TransitionSystem sum = b.build();

    std::vector<TSMap> injections;
    injections.reserve(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const TransitionSystem& p = parts[k];
        std::vector<StateId> sm(p.state_count());
        for (StateId s = 0; s < sm.size(); ++s) sm[s] = *sum.state_id(suffixed(p.state_name(s), k));
        std::vector<ActionId> am(p.action_count());
        for (ActionId a = 0; a < am.size(); ++a) am[a] = *sum.action_id(suffixed(p.action_name(a), k));
        injections.emplace_back(p, sum, std::move(sm), std::move(am));
    }
    return {std::move(sum), std::move(injections)};
}

PushoutResult pushout(const TSMap& f, const TSMap& g) {
    if (f.src() != g.src()) throw std::invalid_argument("pushout legs must share their domain");
    require_cs_input(f.src(), "pushout");
    require_cs_input(f.dst(), "pushout");
    require_cs_input(g.dst(), "pushout");

    CoproductResult sum = coproduct({f.dst(), g.dst()});
    const TSMap& in_x = sum.injections[0];
    const TSMap& in_b = sum.injections[1];

    Partition states(sum.system.state_count());
    Partition actions(sum.system.action_count());
    for (StateId a = 0; a < f.src().state_count(); ++a)
        states.merge(in_x.on_state(f.on_state(a)), in_b.on_state(g.on_state(a)));
    for (ActionId a = 0; a < f.src().action_count(); ++a)
        actions.merge(in_x.on_action(f.on_action(a)), in_b.on_action(g.on_action(a)));

    QuotientResult q = quotient(sum.system, states, actions);
    Reflection r = cs_reflect(q.system);

    TSMap from_x = in_x.then(q.projection).then(r.unit);
    TSMap from_b = in_b.then(q.projection).then(r.unit);
    if (!(f.then(from_x) == g.then(from_b)))
        throw std::logic_error("pushout square does not commute");
    assert_union_law(r.system, {&from_x, &from_b});
    return {std::move(r.system), std::move(from_x), std::move(from_b)};
}

PointedCoproductResult wedge(const std::vector<PointedTS>& parts) {
    if (parts.empty()) throw std::invalid_argument("wedge needs at least one component");
    std::vector<TransitionSystem> systems;
    systems.reserve(parts.size());
    for (const auto& p : parts) systems.push_back(p.ts);
    CoproductResult sum = coproduct(systems);

    Partition states(sum.system.state_count());
    Partition actions(sum.system.action_count());
    for (std::size_t k = 1; k < parts.size(); ++k)
        states.merge(sum.injections[0].on_state(parts[0].base),
                     sum.injections[k].on_state(parts[k].base));

    QuotientResult q = quotient(sum.system, states, actions);
    Reflection r = cs_reflect(q.system);
    StateId base = r.unit.on_state(q.projection.on_state(sum.injections[0].on_state(parts[0].base)));

    std::vector<TSMap> injections;
    injections.reserve(parts.size());
    std::vector<const TSMap*> legs;
    for (std::size_t k = 0; k < parts.size(); ++k)
        injections.push_back(sum.injections[k].then(q.projection).then(r.unit));
    for (const TSMap& leg : injections) legs.push_back(&leg);
    assert_union_law(r.system, legs);
    return {PointedTS(r.system, base), std::move(injections)};
}

PointedPushoutResult pointed_pushout(const PointedTS& a, const PointedTS& x, const PointedTS& b,
                                     const TSMap& f, const TSMap& g) {
    if (!base_preserving(f, a, x) || !base_preserving(g, a, b))
        throw std::invalid_argument("pointed pushout legs must preserve the base state");
    PushoutResult p = pushout(f, g);
    StateId base = p.from_x.on_state(x.base);
    return {PointedTS(p.system, base), std::move(p.from_x), std::move(p.from_b)};
}

} // namespace hdts
