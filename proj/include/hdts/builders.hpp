#pragma once

#include "hdts/star.hpp"

#include <set>

namespace hdts {

// The labelled n-cube: states are the bit vectors {0,1}^n (printed as
// binary strings, "e" for n = 0), actions are (x_i, i) named "<label><i>",
// and the d-transitions flip exactly the d chosen coordinates upward, one
// tuple per ordering of the chosen indices.
TransitionSystem cube(const std::vector<Label>& labels);

// The n-cube with its n-transitions removed. Rejects the empty list.
TransitionSystem boundary(const std::vector<Label>& labels);

// The pure n-transition: two states 0_n and 1_n and the n! orderings of
// the full action list. No faces of lower dimension.
TransitionSystem pure_transition(const std::vector<Label>& labels);

// Four states {1,2,3,4}, one action named after the label, transitions
// (1,x,2) and (3,x,4).
TransitionSystem double_transition(const Label& label);

// Set as a transition system: states only.
TransitionSystem discrete(const std::set<std::string>& names);

using Word = std::vector<Label>;

// The path 0 -> 1 -> ... -> n with actions (x_i, i), based at 0.
PointedTS path(const Word& word);

// The collapsed cylinder over a path: the pointed cylinder of path(w)
// with the two endpoint copies (n,0) and (n,1) identified by a final
// lift. Reduced objects are exactly the systems orthogonal to the maps
// cyl(P(w)) -> C(w). Rejects the empty word.
PointedTS collapsed_cylinder_path(const Word& word);

} // namespace hdts
