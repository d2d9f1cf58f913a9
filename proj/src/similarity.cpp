#include "hdts/similarity.hpp"

namespace hdts {

namespace {

// The induced map between two quotient-style units: chase each class
// through any representative. Returns nothing if the chase is not
// well-defined (which would be an implementation bug, not a user error).
std::optional<TSMap> induced_on_quotients(const TSMap& f, const TSMap& unit_src, const TSMap& unit_dst) {
    constexpr StateId unset = static_cast<StateId>(-1);
    std::vector<StateId> sm(unit_src.dst().state_count(), unset);
    for (StateId s = 0; s < f.src().state_count(); ++s) {
        StateId from = unit_src.on_state(s);
        StateId to = unit_dst.on_state(f.on_state(s));
        if (sm[from] == unset) {
            sm[from] = to;
        } else if (sm[from] != to) {
            return std::nullopt;
        }
    }
    std::vector<ActionId> am(unit_src.dst().action_count(), static_cast<ActionId>(-1));
    for (ActionId a = 0; a < f.src().action_count(); ++a) {
        ActionId from = unit_src.on_action(a);
        ActionId to = unit_dst.on_action(f.on_action(a));
        if (am[from] == static_cast<ActionId>(-1)) {
            am[from] = to;
        } else if (am[from] != to) {
            return std::nullopt;
        }
    }
    // Units are onto, so every entry is set.
    for (StateId s : sm)
        if (s == unset) return std::nullopt;
    for (ActionId a : am)
        if (a == static_cast<ActionId>(-1)) return std::nullopt;
    return TSMap(unit_src.dst(), unit_dst.dst(), std::move(sm), std::move(am));
}

bool is_isomorphism(const TSMap& h) {
    if (!is_mono(h) || !h.onto_states() || !h.onto_actions()) return false;
    // Bijective on carriers; iso iff the transition sets correspond.
    return h.src().transitions().size() == h.dst().transitions().size();
}

} // namespace

bool StateRelation::is_diagonal() const {
    for (const auto& [a, b] : pairs)
        if (a != b) return false;
    return true;
}

bool ActionRelation::is_diagonal() const {
    for (const auto& [a, b] : pairs)
        if (a != b) return false;
    return true;
}

StateRelation past_similar(const PointedTS& pts) {
    if (!is_star_shaped(pts)) throw std::invalid_argument("past_similar requires a star-shaped system");
    return {sync_reachable_pairs(pts)};
}

ActionRelation csa1_relation(const TransitionSystem& ts) {
    ActionRelation rel;
    for (ActionId a = 0; a < ts.action_count(); ++a) rel.pairs.insert({a, a});
    std::map<std::pair<StateId, StateId>, std::vector<ActionId>> edges;
    for (const Transition& t : ts.transitions())
        if (t.dim() == 1) edges[{t.src, t.dst}].push_back(t.actions[0]);
    for (const auto& [ends, acts] : edges) {
        for (std::size_t i = 0; i < acts.size(); ++i) {
            for (std::size_t j = i + 1; j < acts.size(); ++j) {
                if (ts.label(acts[i]) != ts.label(acts[j])) continue;
                rel.pairs.insert({acts[i], acts[j]});
                rel.pairs.insert({acts[j], acts[i]});
            }
        }
    }
    return rel;
}

FibrancyResult is_fibrant(const PointedTS& pts) {
    StateRelation rel = past_similar(pts);
    for (const Transition& t : pts.ts.transitions()) {
        for (const auto& [a, gamma] : rel.pairs) {
            if (a != t.src) continue;
            for (const auto& [b, delta] : rel.pairs) {
                if (b != t.dst) continue;
                Transition candidate{gamma, t.actions, delta};
                if (!pts.ts.has_transition(candidate))
                    return {false, FibrancyWitness{t, gamma, delta, std::move(candidate)}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_reduced(const PointedTS& pts) {
    return past_similar(pts).is_diagonal();
}

ReduceResult reduce(const PointedTS& pts) {
    if (!is_star_shaped(pts)) throw std::invalid_argument("reduce requires a star-shaped system");
    PointedTS cur = pts;
    TSMap unit = TSMap::identity(pts.ts);
    for (;;) {
        StateRelation srel = past_similar(cur);
        ActionRelation arel = csa1_relation(cur.ts);
        Partition states(cur.ts.state_count());
        for (const auto& [a, b] : srel.pairs) states.merge(a, b);
        Partition actions(cur.ts.action_count());
        for (const auto& [a, b] : arel.pairs) actions.merge(a, b);
        if (states.discrete() && actions.discrete()) break;
        PointedQuotientResult q = quotient_pointed(cur, states, actions);
        unit = unit.then(q.projection);
        cur = std::move(q.system);
    }
    if (!check_csa1(cur.ts).empty() || !check_csa2(cur.ts).empty() || !is_reduced(cur))
        throw std::logic_error("reduction fixpoint is not a reduced Cattani-Sassone system");
    return {std::move(cur), std::move(unit)};
}

Reflection collapse_reflect(const TransitionSystem& ts) {
    if (classify(ts).system_class != SystemClass::cattani_sassone)
        throw std::invalid_argument("collapse_reflect requires a Cattani-Sassone system");
    if (ts.state_count() == 0) return {ts, TSMap::identity(ts)};
    Partition states(ts.state_count());
    for (StateId s = 1; s < ts.state_count(); ++s) states.merge(0, s);
    QuotientResult q = quotient(ts, states, Partition(ts.action_count()));
    Reflection r = cs_reflect(q.system);
    return {r.system, q.projection.then(r.unit)};
}

bool is_weak_equivalence_star(const PointedTS& x, const PointedTS& y, const TSMap& f) {
    if (!base_preserving(f, x, y))
        throw std::invalid_argument("weak equivalence test needs a base-preserving map");
    ReduceResult rx = reduce(x);
    ReduceResult ry = reduce(y);
    auto induced = induced_on_quotients(f, rx.unit, ry.unit);
    if (!induced)
        throw std::logic_error("induced map on reductions is not well-defined");
    return is_isomorphism(*induced);
}

bool is_weak_equivalence_csts(const TSMap& f) {
    Reflection rx = collapse_reflect(f.src());
    Reflection ry = collapse_reflect(f.dst());
    auto induced = induced_on_quotients(f, rx.unit, ry.unit);
    if (!induced)
        throw std::logic_error("induced map on collapses is not well-defined");
    return is_isomorphism(*induced);
}

bool homotopic_maps(const PointedTS& x, const PointedTS& y, const TSMap& f, const TSMap& g) {
    if (!base_preserving(f, x, y) || !base_preserving(g, x, y))
        throw std::invalid_argument("homotopy test needs base-preserving maps with equal ends");
    FibrancyResult fib = is_fibrant(y);
    if (!fib.fibrant) throw std::invalid_argument("homotopy test needs a fibrant target");
    if (f.action_map() != g.action_map()) return false;
    StateRelation rel = past_similar(y);
    for (StateId s = 0; s < x.ts.state_count(); ++s)
        if (!rel.contains(f.on_state(s), g.on_state(s))) return false;
    return true;
}

} // namespace hdts
