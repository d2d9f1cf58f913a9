#include "hdts/bisim.hpp"

#include <deque>
#include <map>

namespace hdts {

namespace {

void require_star(const PointedTS& pts, const char* what) {
    if (!is_star_shaped(pts))
        throw std::invalid_argument(std::string(what) + " requires star-shaped systems");
}

std::map<StateId, std::vector<std::pair<ActionId, StateId>>> one_skeleton(const TransitionSystem& ts) {
    std::map<StateId, std::vector<std::pair<ActionId, StateId>>> out;
    for (const Transition& t : ts.transitions())
        if (t.dim() == 1) out[t.src].push_back({t.actions[0], t.dst});
    return out;
}

// Shortest label word from the base to each state (1-transitions only).
std::vector<std::string> words_to_states(const PointedTS& pts) {
    std::vector<std::string> word(pts.ts.state_count());
    std::vector<bool> seen(pts.ts.state_count(), false);
    auto succ = one_skeleton(pts.ts);
    std::deque<StateId> queue{pts.base};
    seen[pts.base] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        auto it = succ.find(s);
        if (it == succ.end()) continue;
        for (const auto& [a, n] : it->second) {
            if (seen[n]) continue;
            seen[n] = true;
            word[n] = word[s] + pts.ts.label(a);
            queue.push_back(n);
        }
    }
    return word;
}

} // namespace

PInjResult is_p_injective(const PointedTS& x, const PointedTS& y, const TSMap& f) {
    require_star(x, "is_p_injective");
    require_star(y, "is_p_injective");
    if (!base_preserving(f, x, y))
        throw std::invalid_argument("is_p_injective needs a base-preserving map");

    auto x_succ = one_skeleton(x.ts);
    auto y_succ = one_skeleton(y.ts);
    std::vector<std::string> words = words_to_states(x);

    for (StateId s = 0; s < x.ts.state_count(); ++s) {
        auto yit = y_succ.find(f.on_state(s));
        if (yit == y_succ.end()) continue;
        for (const auto& [v, beta] : yit->second) {
            bool liftable = false;
            auto xit = x_succ.find(s);
            if (xit != x_succ.end()) {
                for (const auto& [u, alpha] : xit->second) {
                    if (f.on_action(u) == v && f.on_state(alpha) == beta) {
                        liftable = true;
                        break;
                    }
                }
            }
            if (!liftable)
                return {false, PInjWitness{words[s], y.ts.label(v), s}};
        }
    }
    return {true, std::nullopt};
}

std::optional<Bisimulation> strong_bisimilar(const PointedTS& p, const PointedTS& q) {
    require_star(p, "strong_bisimilar");
    require_star(q, "strong_bisimilar");
    auto p_succ = one_skeleton(p.ts);
    auto q_succ = one_skeleton(q.ts);

    std::set<std::pair<StateId, StateId>> rel;
    for (StateId a = 0; a < p.ts.state_count(); ++a)
        for (StateId b = 0; b < q.ts.state_count(); ++b) rel.insert({a, b});

    // Greatest fixpoint by refinement: drop pairs failing forth or back.
    auto simulates = [&](StateId a, StateId b, const std::set<std::pair<StateId, StateId>>& r) {
        auto ita = p_succ.find(a);
        if (ita != p_succ.end()) {
            for (const auto& [u, a2] : ita->second) {
                bool matched = false;
                auto itb = q_succ.find(b);
                if (itb != q_succ.end()) {
                    for (const auto& [v, b2] : itb->second) {
                        if (p.ts.label(u) == q.ts.label(v) && r.count({a2, b2})) {
                            matched = true;
                            break;
                        }
                    }
                }
                if (!matched) return false;
            }
        }
        auto itb = q_succ.find(b);
        if (itb != q_succ.end()) {
            for (const auto& [v, b2] : itb->second) {
                bool matched = false;
                if (ita != p_succ.end()) {
                    for (const auto& [u, a2] : ita->second) {
                        if (p.ts.label(u) == q.ts.label(v) && r.count({a2, b2})) {
                            matched = true;
                            break;
                        }
                    }
                }
                if (!matched) return false;
            }
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = rel.begin(); it != rel.end();) {
            if (!simulates(it->first, it->second, rel)) {
                it = rel.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    if (!rel.count({p.base, q.base})) return std::nullopt;
    return Bisimulation{std::move(rel)};
}

std::optional<Span> p_bisimilar_via_span(const PointedTS& p, const PointedTS& q) {
    auto bisim = strong_bisimilar(p, q);
    if (!bisim) return std::nullopt;

    // Synchronized 1-skeleton over the relation: states are related
    // pairs, actions are label-compatible action pairs used by some
    // synchronized step. Higher closure would add nothing to 1-dim data.
    auto p_succ = one_skeleton(p.ts);
    auto q_succ = one_skeleton(q.ts);

    TsBuilder b;
    auto pair_state = [&](StateId a, StateId c) {
        return b.state("(" + p.ts.state_name(a) + "," + q.ts.state_name(c) + ")");
    };
    auto pair_action = [&](ActionId u, ActionId v) {
        return b.action("(" + p.ts.action_name(u) + "," + q.ts.action_name(v) + ")", p.ts.label(u));
    };
    for (const auto& [a, c] : bisim->relation) pair_state(a, c);
    for (const auto& [a, c] : bisim->relation) {
        auto ita = p_succ.find(a);
        auto itc = q_succ.find(c);
        if (ita == p_succ.end() || itc == q_succ.end()) continue;
        for (const auto& [u, a2] : ita->second) {
            for (const auto& [v, c2] : itc->second) {
                if (p.ts.label(u) != q.ts.label(v)) continue;
                if (!bisim->relation.count({a2, c2})) continue;
                b.transition(pair_state(a, c), {pair_action(u, v)}, pair_state(a2, c2));
            }
        }
    }
    TransitionSystem raw = b.build();
    PointedTS z_raw(raw, "(" + p.ts.state_name(p.base) + "," + q.ts.state_name(q.base) + ")");
    StarCoreflection star = star_coreflect(z_raw);
    const PointedTS& z = star.system;

    auto split = [](const std::string& name) {
        // Names were assembled here as (left,right) with balanced parens.
        int depth = 0;
        for (std::size_t i = 1; i + 1 < name.size(); ++i) {
            if (name[i] == '(') ++depth;
            if (name[i] == ')') --depth;
            if (name[i] == ',' && depth == 0)
                return std::pair<std::string, std::string>{name.substr(1, i - 1),
                                                           name.substr(i + 1, name.size() - i - 2)};
        }
        throw std::logic_error("malformed pair name '" + name + "'");
    };

    auto projection = [&](const TransitionSystem& side, bool left) {
        std::vector<StateId> sm(z.ts.state_count());
        for (StateId s = 0; s < sm.size(); ++s) {
            auto [l, r] = split(z.ts.state_name(s));
            sm[s] = *side.state_id(left ? l : r);
        }
        std::vector<ActionId> am(z.ts.action_count());
        for (ActionId a = 0; a < am.size(); ++a) {
            auto [l, r] = split(z.ts.action_name(a));
            am[a] = *side.action_id(left ? l : r);
        }
        return TSMap(z.ts, side, std::move(sm), std::move(am));
    };

    Span span{z, projection(p.ts, true), projection(q.ts, false)};

    PInjResult left = is_p_injective(span.z, p, span.to_p);
    PInjResult right = is_p_injective(span.z, q, span.to_q);
    if (!left.p_injective || !right.p_injective)
        throw std::logic_error("bisimulation span failed P-injectivity certification; "
                               "the decision surrogate is falsified on this input");
    return span;
}

} // namespace hdts
