#include "hdts/core.hpp"

#include <algorithm>
#include <numeric>

namespace hdts {

std::optional<StateId> TransitionSystem::state_id(std::string_view name) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), name);
    if (it == states_.end() || *it != name) return std::nullopt;
    return static_cast<StateId>(it - states_.begin());
}

std::optional<ActionId> TransitionSystem::action_id(std::string_view name) const {
    auto it = std::lower_bound(actions_.begin(), actions_.end(), name,
                               [](const ActionDecl& a, std::string_view n) { return a.name < n; });
    if (it == actions_.end() || it->name != name) return std::nullopt;
    return static_cast<ActionId>(it - actions_.begin());
}

StateId TsBuilder::state(const std::string& name) {
    auto it = state_index_.find(name);
    if (it != state_index_.end()) return it->second;
    StateId id = static_cast<StateId>(states_.size());
    states_.push_back(name);
    state_index_.emplace(name, id);
    return id;
}

ActionId TsBuilder::action(const std::string& name, const Label& label) {
    auto it = action_index_.find(name);
    if (it != action_index_.end()) {
        if (actions_[it->second].label != label)
            throw std::invalid_argument("action '" + name + "' redeclared with a different label");
        return it->second;
    }
    ActionId id = static_cast<ActionId>(actions_.size());
    actions_.push_back({name, label});
    action_index_.emplace(name, id);
    return id;
}

void TsBuilder::transition(StateId src, std::vector<ActionId> actions, StateId dst) {
    if (actions.empty()) throw std::invalid_argument("transition needs a nonempty action list");
    if (src >= states_.size() || dst >= states_.size())
        throw std::invalid_argument("transition endpoint out of range");
    for (ActionId a : actions)
        if (a >= actions_.size()) throw std::invalid_argument("transition action out of range");
    transitions_.push_back({src, std::move(actions), dst});
}

TransitionSystem TsBuilder::build() const {
    TransitionSystem ts;
    std::vector<StateId> state_perm(states_.size());
    std::vector<ActionId> action_perm(actions_.size());

    std::vector<StateId> state_order(states_.size());
    std::iota(state_order.begin(), state_order.end(), 0);
    std::sort(state_order.begin(), state_order.end(),
              [&](StateId a, StateId b) { return states_[a] < states_[b]; });
    ts.states_.reserve(states_.size());
    for (std::size_t i = 0; i < state_order.size(); ++i) {
        state_perm[state_order[i]] = static_cast<StateId>(i);
        ts.states_.push_back(states_[state_order[i]]);
    }

    std::vector<ActionId> action_order(actions_.size());
    std::iota(action_order.begin(), action_order.end(), 0);
    std::sort(action_order.begin(), action_order.end(),
              [&](ActionId a, ActionId b) { return actions_[a].name < actions_[b].name; });
    ts.actions_.reserve(actions_.size());
    for (std::size_t i = 0; i < action_order.size(); ++i) {
        action_perm[action_order[i]] = static_cast<ActionId>(i);
        ts.actions_.push_back(actions_[action_order[i]]);
    }

    for (const Transition& t : transitions_) {
        Transition mapped{state_perm[t.src], {}, state_perm[t.dst]};
        mapped.actions.reserve(t.actions.size());
        for (ActionId a : t.actions) mapped.actions.push_back(action_perm[a]);
        ts.transitions_.insert(std::move(mapped));
    }
    return ts;
}

TransitionSystem make_ts(const std::vector<std::string>& states,
                         const std::vector<std::pair<std::string, Label>>& actions,
                         const std::vector<std::tuple<std::string, std::vector<std::string>, std::string>>& transitions) {
    TsBuilder b;
    for (const auto& s : states) b.state(s);
    for (const auto& [name, label] : actions) b.action(name, label);
    for (const auto& [src, acts, dst] : transitions) {
        if (!b.has_state(src)) throw std::invalid_argument("undeclared state '" + src + "'");
        if (!b.has_state(dst)) throw std::invalid_argument("undeclared state '" + dst + "'");
        std::vector<ActionId> ids;
        ids.reserve(acts.size());
        for (const auto& a : acts) {
            if (!b.has_action(a)) throw std::invalid_argument("undeclared action '" + a + "'");
            ids.push_back(b.action_of(a));
        }
        b.transition(b.state_of(src), std::move(ids), b.state_of(dst));
    }
    return b.build();
}

TSMap::TSMap(TransitionSystem src, TransitionSystem dst,
             std::vector<StateId> state_map, std::vector<ActionId> action_map)
    : src_(std::move(src)), dst_(std::move(dst)),
      state_map_(std::move(state_map)), action_map_(std::move(action_map)) {
    if (state_map_.size() != src_.state_count() || action_map_.size() != src_.action_count())
        throw std::invalid_argument("map assignment does not cover the source carrier");
    for (StateId s : state_map_)
        if (s >= dst_.state_count()) throw std::invalid_argument("state map out of range");
    for (ActionId a = 0; a < action_map_.size(); ++a) {
        if (action_map_[a] >= dst_.action_count()) throw std::invalid_argument("action map out of range");
        if (src_.label(a) != dst_.label(action_map_[a]))
            throw std::invalid_argument("action map does not preserve the label of '" +
                                        src_.action_name(a) + "'");
    }
    for (const Transition& t : src_.transitions()) {
        if (!dst_.has_transition(image(t)))
            throw std::invalid_argument("map does not send every transition to a transition");
    }
}

TSMap TSMap::identity(const TransitionSystem& ts) {
    std::vector<StateId> sm(ts.state_count());
    std::iota(sm.begin(), sm.end(), 0);
    std::vector<ActionId> am(ts.action_count());
    std::iota(am.begin(), am.end(), 0);
    return TSMap(ts, ts, std::move(sm), std::move(am));
}

TSMap TSMap::by_names(const TransitionSystem& src, const TransitionSystem& dst,
                      const std::vector<std::pair<std::string, std::string>>& state_assignment,
                      const std::vector<std::pair<std::string, std::string>>& action_assignment) {
    std::vector<StateId> sm(src.state_count(), static_cast<StateId>(-1));
    for (const auto& [from, to] : state_assignment) {
        auto f = src.state_id(from);
        auto t = dst.state_id(to);
        if (!f) throw std::invalid_argument("unknown source state '" + from + "'");
        if (!t) throw std::invalid_argument("unknown target state '" + to + "'");
        if (sm[*f] != static_cast<StateId>(-1))
            throw std::invalid_argument("state '" + from + "' assigned twice");
        sm[*f] = *t;
    }
    for (StateId s = 0; s < sm.size(); ++s)
        if (sm[s] == static_cast<StateId>(-1))
            throw std::invalid_argument("state '" + src.state_name(s) + "' has no assignment");
    std::vector<ActionId> am(src.action_count(), static_cast<ActionId>(-1));
    for (const auto& [from, to] : action_assignment) {
        auto f = src.action_id(from);
        auto t = dst.action_id(to);
        if (!f) throw std::invalid_argument("unknown source action '" + from + "'");
        if (!t) throw std::invalid_argument("unknown target action '" + to + "'");
        if (am[*f] != static_cast<ActionId>(-1))
            throw std::invalid_argument("action '" + from + "' assigned twice");
        am[*f] = *t;
    }
    for (ActionId a = 0; a < am.size(); ++a)
        if (am[a] == static_cast<ActionId>(-1))
            throw std::invalid_argument("action '" + src.action_name(a) + "' has no assignment");
    return TSMap(src, dst, std::move(sm), std::move(am));
}

Transition TSMap::image(const Transition& t) const {
    Transition out{state_map_[t.src], {}, state_map_[t.dst]};
    out.actions.reserve(t.actions.size());
    for (ActionId a : t.actions) out.actions.push_back(action_map_[a]);
    return out;
}

TSMap TSMap::then(const TSMap& g) const {
    if (dst_ != g.src())
        throw std::invalid_argument("composition mismatch: codomain differs from the next domain");
    std::vector<StateId> sm(state_map_.size());
    for (std::size_t s = 0; s < sm.size(); ++s) sm[s] = g.on_state(state_map_[s]);
    std::vector<ActionId> am(action_map_.size());
    for (std::size_t a = 0; a < am.size(); ++a) am[a] = g.on_action(action_map_[a]);
    return TSMap(src_, g.dst(), std::move(sm), std::move(am));
}

bool TSMap::onto_states() const {
    std::vector<bool> hit(dst_.state_count(), false);
    for (StateId s : state_map_) hit[s] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool TSMap::onto_actions() const {
    std::vector<bool> hit(dst_.action_count(), false);
    for (ActionId a : action_map_) hit[a] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool TSMap::onto_transitions() const {
    std::set<Transition> images;
    for (const Transition& t : src_.transitions()) images.insert(image(t));
    return images == dst_.transitions();
}

// ---- Axiom predicates ----------------------------------------------------

std::vector<MultisetViolation> check_multiset(const TransitionSystem& ts) {
    std::vector<MultisetViolation> out;
    for (const Transition& t : ts.transitions()) {
        if (t.dim() < 2) continue;
        std::vector<ActionId> perm = t.actions;
        std::sort(perm.begin(), perm.end());
        do {
            Transition candidate{t.src, perm, t.dst};
            if (!ts.has_transition(candidate))
                out.push_back({t, std::move(candidate)});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::vector<StateId> intermediates(const TransitionSystem& ts, const Transition& t, std::size_t p) {
    std::vector<StateId> out;
    if (p == 0 || p >= t.dim()) return out;
    std::vector<ActionId> prefix(t.actions.begin(), t.actions.begin() + static_cast<long>(p));
    std::vector<ActionId> suffix(t.actions.begin() + static_cast<long>(p), t.actions.end());
    for (StateId nu = 0; nu < ts.state_count(); ++nu) {
        if (ts.has_transition({t.src, prefix, nu}) && ts.has_transition({nu, suffix, t.dst}))
            out.push_back(nu);
    }
    return out;
}

std::vector<PatchingViolation> check_patching(const TransitionSystem& ts) {
    std::vector<PatchingViolation> out;
    for (const Transition& t : ts.transitions()) {
        std::size_t n = t.dim();
        if (n < 3) continue;
        // Cache intermediates per cut; cuts range over 1..n-1.
        std::vector<std::vector<StateId>> cut(n);
        for (std::size_t p = 1; p < n; ++p) cut[p] = intermediates(ts, t, p);
        for (std::size_t p = 1; p + 1 < n; ++p) {
            for (std::size_t q = 1; p + q < n; ++q) {
                for (StateId nu1 : cut[p]) {
                    for (StateId nu2 : cut[p + q]) {
                        Transition patch{nu1,
                                         std::vector<ActionId>(t.actions.begin() + static_cast<long>(p),
                                                               t.actions.begin() + static_cast<long>(p + q)),
                                         nu2};
                        if (!ts.has_transition(patch))
                            out.push_back({t, p, q, nu1, nu2, std::move(patch)});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Csa2Violation> check_csa2(const TransitionSystem& ts) {
    std::vector<Csa2Violation> out;
    for (const Transition& t : ts.transitions()) {
        if (t.dim() < 2) continue;
        for (std::size_t p = 1; p < t.dim(); ++p) {
            std::vector<StateId> nus = intermediates(ts, t, p);
            for (std::size_t i = 0; i < nus.size(); ++i)
                for (std::size_t j = i + 1; j < nus.size(); ++j)
                    out.push_back({t, p, nus[i], nus[j]});
        }
    }
    return out;
}

std::vector<Csa1Violation> check_csa1(const TransitionSystem& ts) {
    std::map<std::pair<StateId, StateId>, std::vector<ActionId>> edges;
    for (const Transition& t : ts.transitions())
        if (t.dim() == 1) edges[{t.src, t.dst}].push_back(t.actions[0]);
    std::vector<Csa1Violation> out;
    for (const auto& [ends, acts] : edges) {
        for (std::size_t i = 0; i < acts.size(); ++i)
            for (std::size_t j = i + 1; j < acts.size(); ++j)
                if (acts[i] != acts[j] && ts.label(acts[i]) == ts.label(acts[j]))
                    out.push_back({ends.first, ends.second, acts[i], acts[j]});
    }
    return out;
}

std::vector<IntermediateViolation> check_intermediate(const TransitionSystem& ts) {
    std::vector<IntermediateViolation> out;
    for (const Transition& t : ts.transitions()) {
        if (t.dim() < 2) continue;
        for (std::size_t p = 1; p < t.dim(); ++p)
            if (intermediates(ts, t, p).empty()) out.push_back({t, p});
    }
    return out;
}

std::set<ActionId> check_all_actions_used(const TransitionSystem& ts) {
    std::vector<bool> used(ts.action_count(), false);
    for (const Transition& t : ts.transitions())
        if (t.dim() == 1) used[t.actions[0]] = true;
    std::set<ActionId> out;
    for (ActionId a = 0; a < used.size(); ++a)
        if (!used[a]) out.insert(a);
    return out;
}

const char* to_string(SystemClass c) {
    switch (c) {
        case SystemClass::none: return "none";
        case SystemClass::weak: return "weak";
        case SystemClass::cubical: return "cubical";
        case SystemClass::regular: return "regular";
        case SystemClass::cattani_sassone: return "cattani_sassone";
    }
    return "none";
}

Classification classify(const TransitionSystem& ts) {
    Classification c;
    c.multiset = check_multiset(ts).empty();
    c.patching = check_patching(ts).empty();
    c.all_actions_used = check_all_actions_used(ts).empty();
    c.intermediate_state = check_intermediate(ts).empty();
    c.csa2 = c.intermediate_state && check_csa2(ts).empty();
    c.csa1 = check_csa1(ts).empty();
    if (!(c.multiset && c.patching)) {
        c.system_class = SystemClass::none;
    } else if (!(c.all_actions_used && c.intermediate_state)) {
        c.system_class = SystemClass::weak;
    } else if (!c.csa2) {
        c.system_class = SystemClass::cubical;
    } else if (!c.csa1) {
        c.system_class = SystemClass::regular;
    } else {
        c.system_class = SystemClass::cattani_sassone;
    }
    return c;
}

bool is_mono(const TSMap& f) {
    std::set<StateId> seen_states(f.state_map().begin(), f.state_map().end());
    if (seen_states.size() != f.src().state_count()) return false;
    std::set<ActionId> seen_actions(f.action_map().begin(), f.action_map().end());
    return seen_actions.size() == f.src().action_count();
}

} // namespace hdts
