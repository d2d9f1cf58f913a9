#pragma once

#include "hdts/star.hpp"

#include <optional>
#include <string>

namespace hdts {

// Graphviz export: 1-transitions become labelled edges, higher
// transitions one box node per (source, action multiset, target) orbit,
// the base state (when given) a double circle.
std::string export_dot(const TransitionSystem& ts, const std::string& name = "ts",
                       std::optional<StateId> base = std::nullopt);
std::string export_dot(const PointedTS& pts, const std::string& name = "ts");

} // namespace hdts
