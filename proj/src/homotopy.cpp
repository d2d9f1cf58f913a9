#include "hdts/homotopy.hpp"

#include <deque>
#include <map>

namespace hdts {

namespace {

std::string flag_name(const std::string& state, int eps) {
    return state + "@" + (eps ? "1" : "0");
}

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

void require_cs(const TransitionSystem& ts, const char* what) {
    if (classify(ts).system_class != SystemClass::cattani_sassone)
        throw std::invalid_argument(std::string(what) + " requires a Cattani-Sassone system");
}

// Shared worker: cylinder with a chosen set of single-copy states.
struct CylParts {
    TransitionSystem cyl;
    TSMap gamma0;
    TSMap gamma1;
    TSMap sigma;
};

CylParts build_cylinder(const TransitionSystem& ts, const std::set<StateId>& single) {
    auto flags = [&](StateId s) {
        return single.count(s) ? std::vector<int>{0} : std::vector<int>{0, 1};
    };

    TsBuilder b;
    for (StateId s = 0; s < ts.state_count(); ++s)
        for (int e : flags(s)) b.state(flag_name(ts.state_name(s), e));
    for (const auto& a : ts.actions()) b.action(a.name, a.label);
    for (const Transition& t : ts.transitions()) {
        for (int e0 : flags(t.src)) {
            for (int e1 : flags(t.dst)) {
                std::vector<ActionId> acts;
                acts.reserve(t.actions.size());
                for (ActionId a : t.actions) acts.push_back(b.action_of(ts.action_name(a)));
                b.transition(b.state_of(flag_name(ts.state_name(t.src), e0)), std::move(acts),
                             b.state_of(flag_name(ts.state_name(t.dst), e1)));
            }
        }
    }
    TransitionSystem cyl = b.build();

    auto gamma = [&](int eps) {
        std::vector<StateId> sm(ts.state_count());
        for (StateId s = 0; s < sm.size(); ++s) {
            int e = single.count(s) ? 0 : eps;
            sm[s] = *cyl.state_id(flag_name(ts.state_name(s), e));
        }
        std::vector<ActionId> am(ts.action_count());
        for (ActionId a = 0; a < am.size(); ++a) am[a] = *cyl.action_id(ts.action_name(a));
        return TSMap(ts, cyl, std::move(sm), std::move(am));
    };

    std::vector<StateId> drop(cyl.state_count());
    for (StateId s = 0; s < drop.size(); ++s) {
        const std::string& name = cyl.state_name(s);
        drop[s] = *ts.state_id(name.substr(0, name.size() - 2));
    }
    std::vector<ActionId> aid(cyl.action_count());
    for (ActionId a = 0; a < aid.size(); ++a) aid[a] = *ts.action_id(cyl.action_name(a));
    TSMap sigma(cyl, ts, std::move(drop), std::move(aid));

    return {cyl, gamma(0), gamma(1), std::move(sigma)};
}

// Pair system over a chosen set of state pairs, with the diagonal and
// the two projections. ((a,b),u_1..u_n,(c,d)) is a transition exactly
// when all four mixed tuples (a,u_1..u_n,c), (a,..,d), (b,..,c),
// (b,..,d) are transitions of the input.
struct PairSystem {
    TransitionSystem system;
    TSMap tau;
    TSMap pi0;
    TSMap pi1;
};

PairSystem build_pair_system(const TransitionSystem& ts,
                             const std::set<std::pair<StateId, StateId>>& kept) {
    TsBuilder b;
    std::map<std::pair<StateId, StateId>, StateId> local;
    for (const auto& p : kept)
        local[p] = b.state(pair_name(ts.state_name(p.first), ts.state_name(p.second)));
    for (const auto& a : ts.actions()) b.action(a.name, a.label);

    std::map<std::vector<ActionId>, std::set<std::pair<StateId, StateId>>> by_actions;
    for (const Transition& t : ts.transitions()) by_actions[t.actions].insert({t.src, t.dst});
    for (const auto& [acts, ends] : by_actions) {
        for (const auto& [s0, d0] : ends) {
            for (const auto& [s1, d1] : ends) {
                if (!ends.count({s0, d1}) || !ends.count({s1, d0})) continue;
                auto src = local.find({s0, s1});
                auto dst = local.find({d0, d1});
                if (src == local.end() || dst == local.end()) continue;
                b.transition(src->second, acts, dst->second);
            }
        }
    }
    TransitionSystem sys = b.build();

    // Builder ids move under build(); rebuild the pair lookup by name.
    std::map<StateId, std::pair<StateId, StateId>> parts;
    for (const auto& [p, id] : local) {
        StateId final_id = *sys.state_id(pair_name(ts.state_name(p.first), ts.state_name(p.second)));
        parts[final_id] = p;
    }

    std::vector<ActionId> a_fwd(ts.action_count());
    for (ActionId a = 0; a < a_fwd.size(); ++a) a_fwd[a] = *sys.action_id(ts.action_name(a));
    std::vector<ActionId> a_bwd(sys.action_count());
    for (ActionId a = 0; a < a_bwd.size(); ++a) a_bwd[a] = *ts.action_id(sys.action_name(a));

    std::vector<StateId> diag(ts.state_count());
    for (StateId s = 0; s < diag.size(); ++s) {
        auto it = local.find({s, s});
        if (it == local.end())
            throw std::logic_error("pair system misses a diagonal state");
        diag[s] = *sys.state_id(pair_name(ts.state_name(s), ts.state_name(s)));
    }
    TSMap tau(ts, sys, std::move(diag), a_fwd);

    std::vector<StateId> p0(sys.state_count()), p1(sys.state_count());
    for (const auto& [id, p] : parts) {
        p0[id] = p.first;
        p1[id] = p.second;
    }
    TSMap pi0(sys, ts, std::move(p0), a_bwd);
    TSMap pi1(sys, ts, std::move(p1), a_bwd);

    return {std::move(sys), std::move(tau), std::move(pi0), std::move(pi1)};
}

} // namespace

std::set<StateId> internal_states(const TransitionSystem& ts) {
    std::set<StateId> out;
    for (const Transition& t : ts.transitions()) {
        if (t.dim() != 2) continue;
        for (StateId nu : intermediates(ts, t, 1)) out.insert(nu);
    }
    return out;
}

std::set<StateId> external_states(const TransitionSystem& ts) {
    std::set<StateId> internal = internal_states(ts);
    std::set<StateId> out;
    for (StateId s = 0; s < ts.state_count(); ++s)
        if (!internal.count(s)) out.insert(s);
    return out;
}

CylinderResult cyl_csts(const TransitionSystem& ts) {
    require_cs(ts, "cyl");
    CylParts p = build_cylinder(ts, internal_states(ts));
    return {std::move(p.cyl), std::move(p.gamma0), std::move(p.gamma1), std::move(p.sigma)};
}

PathResult cocyl_csts(const TransitionSystem& ts) {
    require_cs(ts, "cocyl");
    std::set<std::pair<StateId, StateId>> all;
    for (StateId s0 = 0; s0 < ts.state_count(); ++s0)
        for (StateId s1 = 0; s1 < ts.state_count(); ++s1) all.insert({s0, s1});
    auto [cocyl, tau, pi0, pi1] = build_pair_system(ts, all);
    return {std::move(cocyl), std::move(tau), std::move(pi0), std::move(pi1)};
}

PointedCylinderResult cyl_pointed(const PointedTS& pts) {
    require_cs(pts.ts, "pointed cyl");
    std::set<StateId> single = internal_states(pts.ts);
    single.insert(pts.base);
    CylParts p = build_cylinder(pts.ts, single);
    PointedTS cyl(p.cyl, flag_name(pts.base_name(), 0));
    return {std::move(cyl), std::move(p.gamma0), std::move(p.gamma1), std::move(p.sigma)};
}

std::set<std::pair<StateId, StateId>> sync_reachable_pairs(const PointedTS& pts) {
    const TransitionSystem& ts = pts.ts;
    // (a,b) -> (c,d) when one action u carries all four of (a,u,c),
    // (a,u,d), (b,u,c), (b,u,d); the reachable targets are the pairs of
    // common u-successors of a and b.
    std::map<StateId, std::map<ActionId, std::set<StateId>>> succ1;
    for (const Transition& t : ts.transitions())
        if (t.dim() == 1) succ1[t.src][t.actions[0]].insert(t.dst);

    std::set<std::pair<StateId, StateId>> kept;
    std::deque<std::pair<StateId, StateId>> queue;
    kept.insert({pts.base, pts.base});
    queue.push_back({pts.base, pts.base});
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        auto ix = succ1.find(x);
        auto iy = succ1.find(y);
        if (ix == succ1.end() || iy == succ1.end()) continue;
        for (const auto& [a, xs] : ix->second) {
            auto it = iy->second.find(a);
            if (it == iy->second.end()) continue;
            std::vector<StateId> common;
            for (StateId s : xs)
                if (it->second.count(s)) common.push_back(s);
            for (StateId nx : common)
                for (StateId ny : common)
                    if (kept.insert({nx, ny}).second) queue.push_back({nx, ny});
        }
    }
    return kept;
}

PointedPathResult cocyl_star(const PointedTS& pts) {
    if (!is_star_shaped(pts)) throw std::invalid_argument("cocyl_star requires a star-shaped system");
    auto [sys, tau, pi0, pi1] = build_pair_system(pts.ts, sync_reachable_pairs(pts));
    PointedTS cocyl(sys, pair_name(pts.base_name(), pts.base_name()));
    return {std::move(cocyl), std::move(tau), std::move(pi0), std::move(pi1)};
}

} // namespace hdts
