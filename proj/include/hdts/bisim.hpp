#pragma once

#include "hdts/star.hpp"

#include <optional>

namespace hdts {

struct PInjWitness {
    std::string word;       // labels of a path the base realizes
    std::string extension;  // one more letter the codomain offers but the
                            // domain cannot lift
    StateId state = 0;      // the stuck domain state
};

struct PInjResult {
    bool p_injective = false;
    std::optional<PInjWitness> witness;
};

// Right lifting property against all path extensions, decided stepwise:
// lifting problems against free path extensions decompose step by step,
// because the prefix lift is fixed and each extension step only needs a
// matching outgoing transition. So f is P-injective iff for every state
// x and every 1-transition (f(x),v,beta) there is a 1-transition
// (x,u,alpha) with f(u)=v and f(alpha)=beta. Witnesses are concrete
// non-liftable word pairs (w, ww').
PInjResult is_p_injective(const PointedTS& x, const PointedTS& y, const TSMap& f);

// A strong bisimulation between label-annotated 1-skeletons.
struct Bisimulation {
    std::set<std::pair<StateId, StateId>> relation;
};

// Greatest bisimulation; present iff it relates the two base states.
std::optional<Bisimulation> strong_bisimilar(const PointedTS& p, const PointedTS& q);

struct Span {
    PointedTS z;
    TSMap to_p;
    TSMap to_q;
};

// Certificate form of bisimilarity: the synchronized 1-skeleton over the
// greatest bisimulation, with both projections checked P-injective.
// Throws if a projection ever fails the check while the relation exists
// (that would falsify the decision procedure and must surface).
std::optional<Span> p_bisimilar_via_span(const PointedTS& p, const PointedTS& q);

} // namespace hdts
