#pragma once

#include "hdts/reflections.hpp"
#include "hdts/star.hpp"

namespace hdts {

struct CoproductResult {
    TransitionSystem system;
    std::vector<TSMap> injections;
};

// Disjoint union of carriers and transitions. Component k's names get a
// ".<k>" suffix (1-based); injections are monos. General finite colimits
// are expressed as iterated coproducts + pushouts.
CoproductResult coproduct(const std::vector<TransitionSystem>& parts);

struct PushoutResult {
    TransitionSystem system;
    TSMap from_x;  // X -> pushout
    TSMap from_b;  // B -> pushout
};

// Pushout of f : A -> X and g : A -> B in the Cattani-Sassone category:
// carrier-level pushout, image transitions, multiset+patching closure,
// then the CS reflection. Asserts the colimit law: every transition of
// the result is the image of a transition of X or of B.
PushoutResult pushout(const TSMap& f, const TSMap& g);

struct PointedCoproductResult {
    PointedTS system;
    std::vector<TSMap> injections;
};

// Wedge: coproduct with all base states identified.
PointedCoproductResult wedge(const std::vector<PointedTS>& parts);

struct PointedPushoutResult {
    PointedTS system;
    TSMap from_x;
    TSMap from_b;
};

PointedPushoutResult pointed_pushout(const PointedTS& a, const PointedTS& x, const PointedTS& b,
                                     const TSMap& f, const TSMap& g);

} // namespace hdts
