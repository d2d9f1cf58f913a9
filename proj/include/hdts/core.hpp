#pragma once

#include "hdts/types.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace hdts {

struct ActionDecl {
    std::string name;
    Label label;

    friend auto operator<=>(const ActionDecl&, const ActionDecl&) = default;
};

// Finite carrier: states, labelled actions, set of n-transitions.
// Canonical form: states sorted by name, actions sorted by name, transitions
// a sorted set. Structural equality is used throughout. Immutable after
// construction (build via TsBuilder); safe to share across threads.
class TransitionSystem {
public:
    TransitionSystem() = default;

    std::size_t state_count() const { return states_.size(); }
    std::size_t action_count() const { return actions_.size(); }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<ActionDecl>& actions() const { return actions_; }
    const std::set<Transition>& transitions() const { return transitions_; }

    const std::string& state_name(StateId s) const { return states_.at(s); }
    const std::string& action_name(ActionId a) const { return actions_.at(a).name; }
    const Label& label(ActionId a) const { return actions_.at(a).label; }

    std::optional<StateId> state_id(std::string_view name) const;
    std::optional<ActionId> action_id(std::string_view name) const;

    bool has_transition(const Transition& t) const { return transitions_.count(t) != 0; }
    bool empty() const { return states_.empty() && actions_.empty(); }

    friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;

private:
    friend class TsBuilder;

    std::vector<std::string> states_;
    std::vector<ActionDecl> actions_;
    std::set<Transition> transitions_;
};

// Accumulates a carrier in insertion order, then build() canonicalizes
// (sorts states and actions by name and remaps transition ids).
class TsBuilder {
public:
    StateId state(const std::string& name);
    ActionId action(const std::string& name, const Label& label);
    void transition(StateId src, std::vector<ActionId> actions, StateId dst);

    bool has_state(const std::string& name) const { return state_index_.count(name) != 0; }
    bool has_action(const std::string& name) const { return action_index_.count(name) != 0; }
    StateId state_of(const std::string& name) const { return state_index_.at(name); }
    ActionId action_of(const std::string& name) const { return action_index_.at(name); }

    TransitionSystem build() const;

private:
    std::vector<std::string> states_;
    std::vector<ActionDecl> actions_;
    std::map<std::string, StateId, std::less<>> state_index_;
    std::map<std::string, ActionId, std::less<>> action_index_;
    std::vector<Transition> transitions_;
};

// Convenience for tests and small fixtures: everything by name.
TransitionSystem make_ts(const std::vector<std::string>& states,
                         const std::vector<std::pair<std::string, Label>>& actions,
                         const std::vector<std::tuple<std::string, std::vector<std::string>, std::string>>& transitions);

// A label-preserving pair of maps taking transitions to transitions.
// Validates totality, label preservation and transition preservation on
// construction; throws std::invalid_argument otherwise.
class TSMap {
public:
    TSMap(TransitionSystem src, TransitionSystem dst,
          std::vector<StateId> state_map, std::vector<ActionId> action_map);

    static TSMap identity(const TransitionSystem& ts);
    static TSMap by_names(const TransitionSystem& src, const TransitionSystem& dst,
                          const std::vector<std::pair<std::string, std::string>>& state_assignment,
                          const std::vector<std::pair<std::string, std::string>>& action_assignment);

    const TransitionSystem& src() const { return src_; }
    const TransitionSystem& dst() const { return dst_; }

    StateId on_state(StateId s) const { return state_map_.at(s); }
    ActionId on_action(ActionId a) const { return action_map_.at(a); }
    const std::vector<StateId>& state_map() const { return state_map_; }
    const std::vector<ActionId>& action_map() const { return action_map_; }

    Transition image(const Transition& t) const;

    // Composition g(f(-)); requires this->dst() == g.src().
    TSMap then(const TSMap& g) const;

    bool onto_states() const;
    bool onto_actions() const;
    bool onto_transitions() const;

    friend bool operator==(const TSMap&, const TSMap&) = default;

private:
    TransitionSystem src_;
    TransitionSystem dst_;
    std::vector<StateId> state_map_;
    std::vector<ActionId> action_map_;
};

// ---- Axiom predicates ----------------------------------------------------

struct MultisetViolation {
    Transition transition;       // the witness transition
    Transition missing;          // a permutation of it that is absent
};

struct PatchingViolation {
    Transition outer;
    std::size_t p = 0;
    std::size_t q = 0;
    StateId nu1 = 0;
    StateId nu2 = 0;
    Transition missing;          // the absent patch (nu1, u_{p+1..p+q}, nu2)
};

struct Csa2Violation {
    Transition transition;
    std::size_t p = 0;
    StateId nu1 = 0;             // two distinct intermediate states at cut p
    StateId nu2 = 0;
};

struct Csa1Violation {
    StateId src = 0;
    StateId dst = 0;
    ActionId u = 0;              // u != v, equal labels, both (src,u,dst),(src,v,dst) present
    ActionId v = 0;
};

struct IntermediateViolation {
    Transition transition;
    std::size_t p = 0;           // no state splits the transition at p
};

std::vector<MultisetViolation> check_multiset(const TransitionSystem& ts);
std::vector<PatchingViolation> check_patching(const TransitionSystem& ts);
std::vector<Csa2Violation> check_csa2(const TransitionSystem& ts);
std::vector<Csa1Violation> check_csa1(const TransitionSystem& ts);
std::vector<IntermediateViolation> check_intermediate(const TransitionSystem& ts);

// Actions occurring in no 1-transition (the "all actions are used" axiom
// quantifies over 1-transitions, not transitions of every dimension).
std::set<ActionId> check_all_actions_used(const TransitionSystem& ts);

// States splitting t at position p: all nu with (src,u_1..u_p,nu) and
// (nu,u_{p+1}..u_n,dst) both present.
std::vector<StateId> intermediates(const TransitionSystem& ts, const Transition& t, std::size_t p);

enum class SystemClass { none, weak, cubical, regular, cattani_sassone };

const char* to_string(SystemClass c);

struct Classification {
    bool multiset = false;
    bool patching = false;
    bool all_actions_used = false;
    bool intermediate_state = false;
    bool csa2 = false;           // unique intermediate; implies intermediate_state
    bool csa1 = false;
    SystemClass system_class = SystemClass::none;
};

Classification classify(const TransitionSystem& ts);

// One-to-one on states and on actions; a sufficient cofibration certificate
// (such a map is automatically one-to-one on transitions).
bool is_mono(const TSMap& f);

} // namespace hdts
