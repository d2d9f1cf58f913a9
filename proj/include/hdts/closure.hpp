#pragma once

#include "hdts/core.hpp"

#include <set>

namespace hdts {

// Smallest superset closed under permuting action lists. Idempotent.
std::set<Transition> multiset_closure(std::set<Transition> transitions);

// Least fixpoint under the patching rule: whenever a transition of
// dimension n >= 3 splits at p and at p+q (p,q >= 1, p+q < n) through
// states nu1 and nu2, the patch (nu1, u_{p+1..p+q}, nu2) is added.
// Terminates because patches live in the finite universe of tuples over
// the states and bounded-length action lists already present. Naive
// enumeration over (transition, p, q); fine at desk scale (<= ~10^3
// transitions), quadratic-ish per round.
std::set<Transition> patching_closure(std::set<Transition> transitions);

// Joint fixpoint of both closures (patching preserves multiset closure,
// so one extra round suffices; iterated anyway until stable).
std::set<Transition> axiom_closure(std::set<Transition> transitions);

// Union-find partition of 0..n-1 with least-element representatives.
class Partition {
public:
    explicit Partition(std::size_t n);

    std::size_t size() const { return parent_.size(); }
    std::size_t find(std::size_t a) const;
    void merge(std::size_t a, std::size_t b);
    bool discrete() const;  // every class a singleton

    // Classes in order of their least member; each class sorted.
    std::vector<std::vector<std::size_t>> classes() const;

private:
    mutable std::vector<std::size_t> parent_;
};

// Final lift of ts along surjections onto the carrier of `target`
// (target's own transitions must be empty): the transition set of the
// result is the multiset+patching closure of the image tuples.
// Throws if the maps are not total and surjective or break labels.
TransitionSystem final_lift(const TransitionSystem& ts,
                            const TransitionSystem& target_carrier,
                            const std::vector<StateId>& state_map,
                            const std::vector<ActionId>& action_map);

struct QuotientResult {
    TransitionSystem system;
    TSMap projection;
};

// Final lift along the canonical projections of the two partitions.
// Merged classes are named by their lexicographically least member.
// Action classes must be label-homogeneous.
QuotientResult quotient(const TransitionSystem& ts,
                        const Partition& state_partition,
                        const Partition& action_partition);

} // namespace hdts
