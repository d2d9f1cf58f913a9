#include "hdts/star.hpp"

#include <deque>
#include <limits>

namespace hdts {

PointedTS::PointedTS(TransitionSystem system, StateId base_state)
    : ts(std::move(system)), base(base_state) {
    if (base >= ts.state_count()) throw std::invalid_argument("base state out of range");
}

PointedTS::PointedTS(TransitionSystem system, const std::string& base_name) : ts(std::move(system)) {
    auto id = ts.state_id(base_name);
    if (!id) throw std::invalid_argument("base state '" + base_name + "' is not a state");
    base = *id;
}

namespace {

std::vector<std::size_t> bfs_depths(const PointedTS& pts) {
    constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> d(pts.ts.state_count(), unreached);
    if (pts.ts.state_count() == 0) return d;
    std::vector<std::vector<StateId>> succ(pts.ts.state_count());
    for (const Transition& t : pts.ts.transitions())
        if (t.dim() == 1) succ[t.src].push_back(t.dst);
    std::deque<StateId> queue{pts.base};
    d[pts.base] = 0;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (StateId n : succ[s]) {
            if (d[n] == unreached) {
                d[n] = d[s] + 1;
                queue.push_back(n);
            }
        }
    }
    return d;
}

} // namespace

std::set<StateId> reachable_states(const PointedTS& pts) {
    std::set<StateId> out;
    auto d = bfs_depths(pts);
    for (StateId s = 0; s < d.size(); ++s)
        if (d[s] != std::numeric_limits<std::size_t>::max()) out.insert(s);
    return out;
}

bool is_star_shaped(const PointedTS& pts) {
    return reachable_states(pts).size() == pts.ts.state_count();
}

std::size_t depth(const PointedTS& pts, StateId state) {
    if (state >= pts.ts.state_count()) throw std::invalid_argument("state out of range");
    auto d = bfs_depths(pts);
    if (d[state] == std::numeric_limits<std::size_t>::max())
        throw std::invalid_argument("state '" + pts.ts.state_name(state) + "' is unreachable");
    return d[state];
}

StarCoreflection star_coreflect(const PointedTS& pts) {
    std::set<StateId> keep = reachable_states(pts);

    std::set<Transition> kept_transitions;
    std::set<ActionId> kept_actions;
    for (const Transition& t : pts.ts.transitions()) {
        if (!keep.count(t.src)) continue;  // reachable transition = reachable initial state
        if (!keep.count(t.dst))
            throw std::logic_error("star coreflection kept a transition into a removed state; "
                                   "input is not cubical");
        kept_transitions.insert(t);
        for (ActionId a : t.actions) kept_actions.insert(a);
    }

    TsBuilder b;
    std::map<StateId, StateId> sid;
    for (StateId s : keep) sid[s] = b.state(pts.ts.state_name(s));
    std::map<ActionId, ActionId> aid;
    for (ActionId a : kept_actions) aid[a] = b.action(pts.ts.action_name(a), pts.ts.label(a));
    for (const Transition& t : kept_transitions) {
        std::vector<ActionId> acts;
        acts.reserve(t.actions.size());
        for (ActionId a : t.actions) acts.push_back(aid.at(a));
        b.transition(sid.at(t.src), std::move(acts), sid.at(t.dst));
    }
    TransitionSystem sub = b.build();

    std::vector<StateId> smap(sub.state_count());
    for (StateId s = 0; s < smap.size(); ++s) smap[s] = *pts.ts.state_id(sub.state_name(s));
    std::vector<ActionId> amap(sub.action_count());
    for (ActionId a = 0; a < amap.size(); ++a) amap[a] = *pts.ts.action_id(sub.action_name(a));

    PointedTS result(sub, *sub.state_id(pts.base_name()));
    TSMap inclusion(std::move(sub), pts.ts, std::move(smap), std::move(amap));
    return {std::move(result), std::move(inclusion)};
}

PointedQuotientResult quotient_pointed(const PointedTS& pts,
                                       const Partition& state_partition,
                                       const Partition& action_partition) {
    QuotientResult q = quotient(pts.ts, state_partition, action_partition);
    StateId new_base = q.projection.on_state(pts.base);
    return {PointedTS(q.system, new_base), std::move(q.projection)};
}

bool base_preserving(const TSMap& f, const PointedTS& src, const PointedTS& dst) {
    return f.src() == src.ts && f.dst() == dst.ts && f.on_state(src.base) == dst.base;
}

} // namespace hdts
