#include "hdts/reflections.hpp"

namespace hdts {

namespace {

void require_at_least(const TransitionSystem& ts, SystemClass wanted, const char* what) {
    SystemClass c = classify(ts).system_class;
    if (static_cast<int>(c) < static_cast<int>(wanted))
        throw std::invalid_argument(std::string(what) + " requires a " + to_string(wanted) +
                                    " system, got " + to_string(c));
}

// One batch of state merges; returns false when CSA2 already holds.
bool csa2_step(TransitionSystem& cur, TSMap& unit) {
    auto violations = check_csa2(cur);
    if (violations.empty()) return false;
    Partition states(cur.state_count());
    for (const auto& v : violations) states.merge(v.nu1, v.nu2);
    QuotientResult q = quotient(cur, states, Partition(cur.action_count()));
    unit = unit.then(q.projection);
    cur = std::move(q.system);
    return true;
}

bool csa1_step(TransitionSystem& cur, TSMap& unit) {
    auto violations = check_csa1(cur);
    if (violations.empty()) return false;
    Partition actions(cur.action_count());
    for (const auto& v : violations) actions.merge(v.u, v.v);
    QuotientResult q = quotient(cur, Partition(cur.state_count()), actions);
    unit = unit.then(q.projection);
    cur = std::move(q.system);
    return true;
}

} // namespace

Reflection csa2_reflect(const TransitionSystem& ts) {
    require_at_least(ts, SystemClass::cubical, "csa2_reflect");
    TransitionSystem cur = ts;
    TSMap unit = TSMap::identity(ts);
    while (csa2_step(cur, unit)) {
    }
    return {std::move(cur), std::move(unit)};
}

Reflection csa1_reflect(const TransitionSystem& ts) {
    require_at_least(ts, SystemClass::regular, "csa1_reflect");
    TransitionSystem cur = ts;
    TSMap unit = TSMap::identity(ts);
    while (csa1_step(cur, unit)) {
    }
    return {std::move(cur), std::move(unit)};
}

Reflection cs_reflect(const TransitionSystem& ts) {
    require_at_least(ts, SystemClass::cubical, "cs_reflect");
    TransitionSystem cur = ts;
    TSMap unit = TSMap::identity(ts);
    for (;;) {
        if (csa2_step(cur, unit)) continue;
        if (csa1_step(cur, unit)) continue;
        break;
    }
    if (classify(cur).system_class != SystemClass::cattani_sassone)
        throw std::logic_error("cs_reflect fixpoint is not Cattani-Sassone");
    return {std::move(cur), std::move(unit)};
}

} // namespace hdts
