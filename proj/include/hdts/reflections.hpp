#pragma once

#include "hdts/closure.hpp"

namespace hdts {

struct Reflection {
    TransitionSystem system;
    TSMap unit;  // input -> reflected system; onto on states, actions, transitions
};

// Forces the unique-intermediate axiom on a cubical system by repeatedly
// identifying every distinct intermediate pair and taking the final lift,
// to a fixpoint. The unit is onto on states and bijective on actions.
Reflection csa2_reflect(const TransitionSystem& ts);

// Forces CSA1 on a regular system by repeatedly identifying parallel
// equal-label action pairs, to a fixpoint. The unit is bijective on
// states and onto on actions.
Reflection csa1_reflect(const TransitionSystem& ts);

// Joint reflection onto Cattani-Sassone systems: alternates the CSA2 and
// CSA1 passes (an action merge can expose a fresh intermediate clash)
// until both axioms hold.
Reflection cs_reflect(const TransitionSystem& ts);

} // namespace hdts
