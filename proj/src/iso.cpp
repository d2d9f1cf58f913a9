#include "hdts/iso.hpp"

#include <algorithm>
#include <map>

namespace hdts {

namespace {

// Per-state fingerprint, invariant under isomorphism: counts of
// (direction, dimension, sorted label list) over incident transitions.
using Signature = std::map<std::tuple<int, std::size_t, std::vector<Label>>, int>;

Signature state_signature(const TransitionSystem& ts, StateId s) {
    Signature sig;
    for (const Transition& t : ts.transitions()) {
        std::vector<Label> labels;
        labels.reserve(t.actions.size());
        for (ActionId a : t.actions) labels.push_back(ts.label(a));
        std::sort(labels.begin(), labels.end());
        if (t.src == s) sig[{0, t.dim(), labels}]++;
        if (t.dst == s) sig[{1, t.dim(), labels}]++;
    }
    return sig;
}

struct Search {
    const TransitionSystem& a;
    const TransitionSystem& b;
    std::optional<std::pair<StateId, StateId>> pin;
    std::vector<StateId> smap;
    std::vector<bool> sused;
    std::vector<ActionId> amap;
    std::vector<bool> aused;
    std::vector<Signature> asig, bsig;

    Search(const TransitionSystem& a_, const TransitionSystem& b_,
           std::optional<std::pair<StateId, StateId>> pin_)
        : a(a_), b(b_), pin(pin_),
          smap(a_.state_count()), sused(b_.state_count(), false),
          amap(a_.action_count()), aused(b_.action_count(), false) {
        for (StateId i = 0; i < a.state_count(); ++i) asig.push_back(state_signature(a, i));
        for (StateId i = 0; i < b.state_count(); ++i) bsig.push_back(state_signature(b, i));
    }

    bool transitions_match() const {
        for (const Transition& t : a.transitions()) {
            Transition img{smap[t.src], {}, smap[t.dst]};
            img.actions.reserve(t.actions.size());
            for (ActionId x : t.actions) img.actions.push_back(amap[x]);
            if (!b.has_transition(img)) return false;
        }
        return true;
    }

    bool assign_states(StateId next) {
        if (next == a.state_count()) return transitions_match();
        for (StateId cand = 0; cand < b.state_count(); ++cand) {
            if (sused[cand] || asig[next] != bsig[cand]) continue;
            if (pin && ((next == pin->first) != (cand == pin->second))) continue;
            smap[next] = cand;
            sused[cand] = true;
            if (assign_states(next + 1)) return true;
            sused[cand] = false;
        }
        return false;
    }

    bool assign_actions(ActionId next) {
        if (next == a.action_count()) return assign_states(0);
        for (ActionId cand = 0; cand < b.action_count(); ++cand) {
            if (aused[cand] || a.label(next) != b.label(cand)) continue;
            amap[next] = cand;
            aused[cand] = true;
            if (assign_actions(next + 1)) return true;
            aused[cand] = false;
        }
        return false;
    }
};

std::optional<TSMap> search_isomorphism(const TransitionSystem& a, const TransitionSystem& b,
                                        std::optional<std::pair<StateId, StateId>> pin) {
    if (a.state_count() != b.state_count() || a.action_count() != b.action_count() ||
        a.transitions().size() != b.transitions().size())
        return std::nullopt;

    std::vector<Label> la, lb;
    for (const auto& x : a.actions()) la.push_back(x.label);
    for (const auto& x : b.actions()) lb.push_back(x.label);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return std::nullopt;

    Search s(a, b, pin);
    if (!s.assign_actions(0)) return std::nullopt;
    return TSMap(a, b, std::move(s.smap), std::move(s.amap));
}

} // namespace

std::optional<TSMap> find_isomorphism(const TransitionSystem& a, const TransitionSystem& b) {
    return search_isomorphism(a, b, std::nullopt);
}

bool isomorphic(const TransitionSystem& a, const TransitionSystem& b) {
    return find_isomorphism(a, b).has_value();
}

std::optional<TSMap> find_isomorphism(const PointedTS& a, const PointedTS& b) {
    return search_isomorphism(a.ts, b.ts, std::make_pair(a.base, b.base));
}

bool isomorphic(const PointedTS& a, const PointedTS& b) {
    return find_isomorphism(a, b).has_value();
}

} // namespace hdts
