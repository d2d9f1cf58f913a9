#pragma once

#include "hdts/closure.hpp"
#include "hdts/core.hpp"

#include <set>

namespace hdts {

struct PointedTS {
    TransitionSystem ts;
    StateId base = 0;

    PointedTS() = default;
    PointedTS(TransitionSystem system, StateId base_state);
    PointedTS(TransitionSystem system, const std::string& base_name);

    const std::string& base_name() const { return ts.state_name(base); }

    friend bool operator==(const PointedTS&, const PointedTS&) = default;
};

// States reachable from the base via directed sequences of 1-transitions.
// Paths are 1-dimensional, so higher transitions never contribute steps.
std::set<StateId> reachable_states(const PointedTS& pts);

bool is_star_shaped(const PointedTS& pts);

// Shortest 1-transition path length from the base. Throws on unreachable
// states.
std::size_t depth(const PointedTS& pts, StateId state);

struct StarCoreflection {
    PointedTS system;
    TSMap inclusion;  // coreflected subobject -> original
};

// Largest star-shaped subobject: drops unreachable states, transitions
// whose initial state is unreachable, and actions used by no kept
// transition. Idempotent.
StarCoreflection star_coreflect(const PointedTS& pts);

struct PointedQuotientResult {
    PointedTS system;
    TSMap projection;
};

PointedQuotientResult quotient_pointed(const PointedTS& pts,
                                       const Partition& state_partition,
                                       const Partition& action_partition);

bool base_preserving(const TSMap& f, const PointedTS& src, const PointedTS& dst);

} // namespace hdts
