#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hdts {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;
using Label = std::string;

// An n-transition (n >= 1). The action list is ordered; closure under
// permutation is explicit (multiset axiom), never implicit.
struct Transition {
    StateId src = 0;
    std::vector<ActionId> actions;
    StateId dst = 0;

    std::size_t dim() const { return actions.size(); }

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

} // namespace hdts
