#pragma once

#include "hdts/star.hpp"

#include <optional>

namespace hdts {

// Backtracking isomorphism search (label-respecting bijections on states
// and actions preserving transitions both ways). Desk-scale systems only.
std::optional<TSMap> find_isomorphism(const TransitionSystem& a, const TransitionSystem& b);
bool isomorphic(const TransitionSystem& a, const TransitionSystem& b);

// Base-preserving variant.
std::optional<TSMap> find_isomorphism(const PointedTS& a, const PointedTS& b);
bool isomorphic(const PointedTS& a, const PointedTS& b);

} // namespace hdts
