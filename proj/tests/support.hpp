#pragma once

// Shared test machinery: map enumeration and random-system generators.

#include "hdts/reflections.hpp"
#include "hdts/star.hpp"

#include <random>

namespace hdts::support {

// All label-preserving transition-preserving maps x -> y, by exhaustive
// backtracking with incremental transition pruning. Desk scale only.
std::vector<TSMap> enumerate_homs(const TransitionSystem& x, const TransitionSystem& y);
std::size_t count_homs(const TransitionSystem& x, const TransitionSystem& y);

// Random cubical system with at most max_states states: a random
// 1-skeleton plus a few completed squares. May violate CSA2 and CSA1.
TransitionSystem random_cubical(std::mt19937& rng, int max_states = 4);

// Random Cattani-Sassone system (random_cubical, reflected).
TransitionSystem random_cs(std::mt19937& rng, int max_states = 4);

// Random star-shaped pointed system (coreflected random_cs).
PointedTS random_star(std::mt19937& rng, int max_states = 4);

} // namespace hdts::support
