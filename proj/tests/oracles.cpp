#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace hdts::oracles {

TransitionSystem cube_bruteforce(const std::vector<Label>& labels) {
    const std::size_t n = labels.size();
    TsBuilder b;
    std::vector<StateId> states(1u << n);
    for (unsigned v = 0; v < (1u << n); ++v) {
        std::string name = n == 0 ? "e" : std::string(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (v & (1u << i)) name[i] = '1';
        states[v] = b.state(name);
    }
    std::vector<ActionId> acts(n);
    for (std::size_t i = 0; i < n; ++i)
        acts[i] = b.action(labels[i] + std::to_string(i + 1), labels[i]);

    // Every candidate (state, distinct-index list, state), tested against
    // the definition.
    for (unsigned lo = 0; lo < (1u << n); ++lo) {
        for (unsigned hi = 0; hi < (1u << n); ++hi) {
            for (unsigned subset = 1; subset < (1u << n); ++subset) {
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < n; ++i)
                    if (subset & (1u << i)) idx.push_back(i);
                std::sort(idx.begin(), idx.end());
                do {
                    bool ok = true;
                    for (std::size_t i = 0; i < n && ok; ++i) {
                        bool lo_bit = lo & (1u << i);
                        bool hi_bit = hi & (1u << i);
                        bool chosen = subset & (1u << i);
                        if (lo_bit && !hi_bit) ok = false;            // grows only
                        if ((lo_bit != hi_bit) != chosen) ok = false; // flips exactly there
                    }
                    if (ok) {
                        std::vector<ActionId> list;
                        for (std::size_t i : idx) list.push_back(acts[i]);
                        b.transition(states[lo], std::move(list), states[hi]);
                    }
                } while (std::next_permutation(idx.begin(), idx.end()));
            }
        }
    }
    return b.build();
}

TransitionSystem raw_cylinder(const TransitionSystem& ts) {
    TsBuilder b;
    auto sname = [&](StateId s, int e) { return ts.state_name(s) + "@" + (e ? "1" : "0"); };
    auto aname = [&](ActionId a, int e) { return ts.action_name(a) + "@" + (e ? "1" : "0"); };
    for (StateId s = 0; s < ts.state_count(); ++s)
        for (int e = 0; e < 2; ++e) b.state(sname(s, e));
    for (ActionId a = 0; a < ts.action_count(); ++a)
        for (int e = 0; e < 2; ++e) b.action(aname(a, e), ts.label(a));
    for (const Transition& t : ts.transitions()) {
        std::size_t slots = t.dim() + 2;
        for (unsigned bits = 0; bits < (1u << slots); ++bits) {
            std::vector<ActionId> acts;
            acts.reserve(t.dim());
            for (std::size_t i = 0; i < t.dim(); ++i)
                acts.push_back(b.action_of(aname(t.actions[i], (bits >> (i + 1)) & 1)));
            b.transition(b.state_of(sname(t.src, bits & 1)), std::move(acts),
                         b.state_of(sname(t.dst, (bits >> (slots - 1)) & 1)));
        }
    }
    return b.build();
}

TransitionSystem pscocyl(const TransitionSystem& ts) {
    const std::size_t n_states = ts.state_count();
    auto encode = [&](StateId a, StateId b) { return static_cast<StateId>(a * n_states + b); };

    std::size_t max_dim = 0;
    for (const Transition& t : ts.transitions()) max_dim = std::max(max_dim, t.dim());

    // accepted[d] = pair-transitions of dimension d over encoded pair states.
    std::vector<std::set<Transition>> accepted(max_dim + 1);

    std::map<std::vector<ActionId>, std::set<std::pair<StateId, StateId>>> by_actions;
    for (const Transition& t : ts.transitions()) by_actions[t.actions].insert({t.src, t.dst});

    for (std::size_t d = 1; d <= max_dim; ++d) {
        for (const auto& [acts, ends] : by_actions) {
            if (acts.size() != d) continue;
            for (const auto& [s0, d0] : ends) {
                for (const auto& [s1, d1] : ends) {
                    // All four mixed endpoint choices must be transitions.
                    if (!ends.count({s0, d1}) || !ends.count({s1, d0})) continue;
                    Transition cand{encode(s0, s1), acts, encode(d0, d1)};
                    if (d == 1) {
                        accepted[1].insert(std::move(cand));
                        continue;
                    }
                    // Every permutation and cut must split through an
                    // accepted pair of lower dimension.
                    std::vector<ActionId> perm = acts;
                    std::sort(perm.begin(), perm.end());
                    bool ok = true;
                    do {
                        for (std::size_t p = 1; p < d && ok; ++p) {
                            std::vector<ActionId> pre(perm.begin(), perm.begin() + static_cast<long>(p));
                            std::vector<ActionId> suf(perm.begin() + static_cast<long>(p), perm.end());
                            bool found = false;
                            for (StateId g = 0; g < n_states * n_states && !found; ++g) {
                                if (accepted[p].count({cand.src, pre, g}) &&
                                    accepted[d - p].count({g, suf, cand.dst}))
                                    found = true;
                            }
                            if (!found) ok = false;
                        }
                    } while (ok && std::next_permutation(perm.begin(), perm.end()));
                    if (ok) accepted[d].insert(std::move(cand));
                }
            }
        }
    }

    TsBuilder b;
    for (StateId a = 0; a < n_states; ++a)
        for (StateId c = 0; c < n_states; ++c)
            b.state("(" + ts.state_name(a) + "," + ts.state_name(c) + ")");
    for (const auto& a : ts.actions()) b.action(a.name, a.label);
    for (std::size_t d = 1; d <= max_dim; ++d) {
        for (const Transition& t : accepted[d]) {
            auto decode = [&](StateId enc) {
                return "(" + ts.state_name(enc / n_states) + "," + ts.state_name(enc % n_states) + ")";
            };
            std::vector<ActionId> acts;
            for (ActionId a : t.actions) acts.push_back(b.action_of(ts.action_name(a)));
            b.transition(b.state_of(decode(t.src)), std::move(acts), b.state_of(decode(t.dst)));
        }
    }
    return b.build();
}

} // namespace hdts::oracles
