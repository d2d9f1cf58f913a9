#pragma once

#include "hdts/star.hpp"

#include <set>

namespace hdts {

// Internal states: intermediates of some 2-transition, i.e. alpha with
// (gamma,u1,u2,delta), (gamma,u1,alpha), (alpha,u2,delta) all present.
// For cubical systems this is the full internality notion.
std::set<StateId> internal_states(const TransitionSystem& ts);
std::set<StateId> external_states(const TransitionSystem& ts);

struct CylinderResult {
    TransitionSystem cyl;
    TSMap gamma0;  // X -> cyl
    TSMap gamma1;  // X -> cyl
    TSMap sigma;   // cyl -> X; sigma . gamma_eps = id
};

// Cylinder of a Cattani-Sassone system: internal states are kept single,
// external states are doubled, actions are unchanged, and a decorated
// tuple is a transition exactly when its shadow is one.
// States are named "<state>@0" / "<state>@1".
CylinderResult cyl_csts(const TransitionSystem& ts);

struct PathResult {
    TransitionSystem cocyl;
    TSMap tau;  // X -> cocyl (diagonal); pi_eps . tau = id
    TSMap pi0;  // cocyl -> X
    TSMap pi1;
};

// Path object of a Cattani-Sassone system: states are pairs "(a,b)",
// actions unchanged, and ((a,b),u_1..u_n,(c,d)) is a transition exactly
// when all four mixed tuples (a,..,c), (a,..,d), (b,..,c), (b,..,d)
// are. Quadratic in states.
PathResult cocyl_csts(const TransitionSystem& ts);

struct PointedCylinderResult {
    PointedTS cyl;
    TSMap gamma0;
    TSMap gamma1;
    TSMap sigma;
};

// Pointed cylinder: as cyl_csts but the base state counts as internal;
// the base of the cylinder is (*,0).
PointedCylinderResult cyl_pointed(const PointedTS& pts);

struct PointedPathResult {
    PointedTS cocyl;
    TSMap tau;
    TSMap pi0;
    TSMap pi1;
};

// Pairs reachable from (base,base) by synchronized 1-steps: one step
// per action u whose four mixed endpoint tuples are all transitions.
std::set<std::pair<StateId, StateId>> sync_reachable_pairs(const PointedTS& pts);

// Star-shaped path object: the reachable part of the pointed path object
// from (*,*). Its states are exactly the past-similar pairs; all actions
// of the input are carried over.
PointedPathResult cocyl_star(const PointedTS& pts);

} // namespace hdts
