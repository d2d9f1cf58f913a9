#include "hdts/closure.hpp"

#include <algorithm>
#include <numeric>

namespace hdts {

std::set<Transition> multiset_closure(std::set<Transition> transitions) {
    std::set<Transition> out = std::move(transitions);
    std::vector<Transition> todo(out.begin(), out.end());
    for (const Transition& t : todo) {
        if (t.dim() < 2) continue;
        std::vector<ActionId> perm = t.actions;
        std::sort(perm.begin(), perm.end());
        do {
            out.insert({t.src, perm, t.dst});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

namespace {

// Intermediates of t at cut p within a raw tuple set.
std::vector<StateId> set_intermediates(const std::set<Transition>& ts, const Transition& t, std::size_t p) {
    std::vector<ActionId> prefix(t.actions.begin(), t.actions.begin() + static_cast<long>(p));
    std::vector<ActionId> suffix(t.actions.begin() + static_cast<long>(p), t.actions.end());
    // Candidate nu must appear as the target of a (src, prefix, nu) tuple.
    std::vector<StateId> out;
    for (auto it = ts.lower_bound(Transition{t.src, prefix, 0}); it != ts.end(); ++it) {
        if (it->src != t.src || it->actions != prefix) break;
        StateId nu = it->dst;
        if (ts.count(Transition{nu, suffix, t.dst})) out.push_back(nu);
    }
    return out;
}

} // namespace

std::set<Transition> patching_closure(std::set<Transition> transitions) {
    std::set<Transition> out = std::move(transitions);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Transition> snapshot(out.begin(), out.end());
        for (const Transition& t : snapshot) {
            std::size_t n = t.dim();
            if (n < 3) continue;
            std::vector<std::vector<StateId>> cut(n);
            for (std::size_t p = 1; p < n; ++p) cut[p] = set_intermediates(out, t, p);
            for (std::size_t p = 1; p + 1 < n; ++p) {
                for (std::size_t q = 1; p + q < n; ++q) {
                    for (StateId nu1 : cut[p]) {
                        for (StateId nu2 : cut[p + q]) {
                            Transition patch{nu1,
                                             std::vector<ActionId>(t.actions.begin() + static_cast<long>(p),
                                                                   t.actions.begin() + static_cast<long>(p + q)),
                                             nu2};
                            if (out.insert(std::move(patch)).second) changed = true;
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::set<Transition> axiom_closure(std::set<Transition> transitions) {
    std::set<Transition> cur = std::move(transitions);
    for (;;) {
        std::set<Transition> next = patching_closure(multiset_closure(cur));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Partition::Partition(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

std::size_t Partition::find(std::size_t a) const {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

void Partition::merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Least index wins, so representatives are stable.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
}

bool Partition::discrete() const {
    for (std::size_t i = 0; i < parent_.size(); ++i)
        if (find(i) != i) return false;
    return true;
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> by_root(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : by_root)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

TransitionSystem final_lift(const TransitionSystem& ts,
                            const TransitionSystem& target_carrier,
                            const std::vector<StateId>& state_map,
                            const std::vector<ActionId>& action_map) {
    if (!target_carrier.transitions().empty())
        throw std::invalid_argument("final lift target must be a bare carrier");
    if (state_map.size() != ts.state_count() || action_map.size() != ts.action_count())
        throw std::invalid_argument("final lift maps must be total");
    std::vector<bool> state_hit(target_carrier.state_count(), false);
    for (StateId s : state_map) {
        if (s >= target_carrier.state_count()) throw std::invalid_argument("state map out of range");
        state_hit[s] = true;
    }
    if (!std::all_of(state_hit.begin(), state_hit.end(), [](bool b) { return b; }))
        throw std::invalid_argument("final lift state map must be onto the target carrier");
    std::vector<bool> action_hit(target_carrier.action_count(), false);
    for (ActionId a = 0; a < action_map.size(); ++a) {
        if (action_map[a] >= target_carrier.action_count())
            throw std::invalid_argument("action map out of range");
        if (ts.label(a) != target_carrier.label(action_map[a]))
            throw std::invalid_argument("final lift action map must preserve labels");
        action_hit[action_map[a]] = true;
    }
    if (!std::all_of(action_hit.begin(), action_hit.end(), [](bool b) { return b; }))
        throw std::invalid_argument("final lift action map must be onto the target carrier");

    std::set<Transition> images;
    for (const Transition& t : ts.transitions()) {
        Transition img{state_map[t.src], {}, state_map[t.dst]};
        img.actions.reserve(t.actions.size());
        for (ActionId a : t.actions) img.actions.push_back(action_map[a]);
        images.insert(std::move(img));
    }

    TsBuilder b;
    for (const auto& s : target_carrier.states()) b.state(s);
    for (const auto& a : target_carrier.actions()) b.action(a.name, a.label);
    for (const Transition& t : axiom_closure(std::move(images)))
        b.transition(t.src, t.actions, t.dst);
    return b.build();
}

QuotientResult quotient(const TransitionSystem& ts,
                        const Partition& state_partition,
                        const Partition& action_partition) {
    if (state_partition.size() != ts.state_count() || action_partition.size() != ts.action_count())
        throw std::invalid_argument("partition size does not match the carrier");

    for (const auto& cls : action_partition.classes()) {
        for (std::size_t a : cls)
            if (ts.label(static_cast<ActionId>(a)) != ts.label(static_cast<ActionId>(cls[0])))
                throw std::invalid_argument("action class mixes labels ('" +
                                            ts.action_name(static_cast<ActionId>(cls[0])) + "' vs '" +
                                            ts.action_name(static_cast<ActionId>(a)) + "')");
    }

    // Class name = lexicographically least member name.
    auto class_name = [](const std::vector<std::string>& names, const std::vector<std::size_t>& cls) {
        std::string least = names[cls[0]];
        for (std::size_t i : cls) least = std::min(least, names[i]);
        return least;
    };

    TsBuilder carrier;
    std::vector<std::string> state_class_names(ts.state_count());
    for (const auto& cls : state_partition.classes()) {
        std::string name = class_name(ts.states(), cls);
        carrier.state(name);
        for (std::size_t i : cls) state_class_names[i] = name;
    }
    std::vector<std::string> action_class_names(ts.action_count());
    for (const auto& cls : action_partition.classes()) {
        std::vector<std::string> names;
        std::string least = ts.action_name(static_cast<ActionId>(cls[0]));
        for (std::size_t i : cls) least = std::min(least, ts.action_name(static_cast<ActionId>(i)));
        carrier.action(least, ts.label(static_cast<ActionId>(cls[0])));
        for (std::size_t i : cls) action_class_names[i] = least;
    }
    TransitionSystem target = carrier.build();

    std::vector<StateId> smap(ts.state_count());
    for (StateId s = 0; s < smap.size(); ++s) smap[s] = *target.state_id(state_class_names[s]);
    std::vector<ActionId> amap(ts.action_count());
    for (ActionId a = 0; a < amap.size(); ++a) amap[a] = *target.action_id(action_class_names[a]);

    TransitionSystem lifted = final_lift(ts, target, smap, amap);
    TSMap projection(ts, lifted, std::move(smap), std::move(amap));
    return {std::move(lifted), std::move(projection)};
}

} // namespace hdts
