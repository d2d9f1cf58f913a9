#pragma once

#include "hdts/homotopy.hpp"
#include "hdts/reflections.hpp"

#include <optional>

namespace hdts {

// Finite relation on states. Produced by past_similar it is reflexive
// and symmetric but not necessarily transitive.
struct StateRelation {
    std::set<std::pair<StateId, StateId>> pairs;

    bool contains(StateId a, StateId b) const { return pairs.count({a, b}) != 0; }
    bool is_diagonal() const;

    friend bool operator==(const StateRelation&, const StateRelation&) = default;
};

// The relation u ~ v: equal labels and some pair of states alpha, beta
// with both (alpha,u,beta) and (alpha,v,beta) transitions. Returned with
// the diagonal included.
struct ActionRelation {
    std::set<std::pair<ActionId, ActionId>> pairs;

    bool contains(ActionId a, ActionId b) const { return pairs.count({a, b}) != 0; }
    bool is_diagonal() const;
};

// Past-similarity: pairs reachable from (*,*) by synchronized 1-steps
// (a step moves both coordinates to common u-successors of both, for a
// single action u). Equivalently the states of cocyl_star.
StateRelation past_similar(const PointedTS& pts);

ActionRelation csa1_relation(const TransitionSystem& ts);

struct FibrancyWitness {
    Transition transition;  // present
    StateId gamma = 0;      // gamma ~past transition.src
    StateId delta = 0;      // delta ~past transition.dst
    Transition missing;     // the absent (gamma, u_1..u_n, delta)
};

struct FibrancyResult {
    bool fibrant = false;
    std::optional<FibrancyWitness> witness;
};

// Fibrant iff the transition set is closed under replacing endpoints by
// past-similar states.
FibrancyResult is_fibrant(const PointedTS& pts);

// Reduced iff past-similarity is the diagonal.
bool is_reduced(const PointedTS& pts);

struct ReduceResult {
    PointedTS system;
    TSMap unit;  // input -> reduced system; onto on states, actions, transitions
};

// Reduction fixpoint: repeatedly quotient states by the equivalence
// generated by past-similarity and actions by the equivalence generated
// by the parallel-action relation, with a final lift, until nothing
// merges. The raw relations need not be transitive, so each step uses
// their generated equivalences. Each proper step shrinks the carrier,
// so the chain stabilizes in at most |states|+|actions| steps. The
// result satisfies CSA1 and CSA2 and is reduced (asserted).
ReduceResult reduce(const PointedTS& pts);

// Collapse reflection: every state identified to one, final lift, CS
// reflection. The plain-category counterpart of reduce.
Reflection collapse_reflect(const TransitionSystem& ts);

// Weak equivalence tests: a map is a weak equivalence iff its reduction
// (star-shaped case) or total collapse (plain case) is an isomorphism.
bool is_weak_equivalence_star(const PointedTS& x, const PointedTS& y, const TSMap& f);
bool is_weak_equivalence_csts(const TSMap& f);

// Homotopy of base-preserving maps into a fibrant target: equal on
// actions and pointwise past-similar on states. Throws when the target
// is not fibrant.
bool homotopic_maps(const PointedTS& x, const PointedTS& y, const TSMap& f, const TSMap& g);

} // namespace hdts
