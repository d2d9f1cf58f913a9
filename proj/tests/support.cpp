#include "support.hpp"

#include "hdts/homotopy.hpp"

#include <algorithm>

namespace hdts::support {

namespace {

struct HomSearch {
    const TransitionSystem& x;
    const TransitionSystem& y;
    std::vector<ActionId> amap;
    std::vector<StateId> smap;
    // Transitions become checkable once their later endpoint is assigned.
    std::vector<std::vector<const Transition*>> ready_at;
    std::vector<TSMap> found;

    HomSearch(const TransitionSystem& x_, const TransitionSystem& y_)
        : x(x_), y(y_), amap(x_.action_count()), smap(x_.state_count()),
          ready_at(x_.state_count()) {
        for (const Transition& t : x.transitions())
            ready_at[std::max(t.src, t.dst)].push_back(&t);
    }

    bool check(const Transition& t) const {
        Transition img{smap[t.src], {}, smap[t.dst]};
        img.actions.reserve(t.actions.size());
        for (ActionId a : t.actions) img.actions.push_back(amap[a]);
        return y.has_transition(img);
    }

    void states(StateId next) {
        if (next == x.state_count()) {
            found.emplace_back(x, y, smap, amap);
            return;
        }
        for (StateId cand = 0; cand < y.state_count(); ++cand) {
            smap[next] = cand;
            bool ok = true;
            for (const Transition* t : ready_at[next])
                if (!check(*t)) {
                    ok = false;
                    break;
                }
            if (ok) states(next + 1);
        }
    }

    void actions(ActionId next) {
        if (next == x.action_count()) {
            states(0);
            return;
        }
        for (ActionId cand = 0; cand < y.action_count(); ++cand) {
            if (x.label(next) != y.label(cand)) continue;
            amap[next] = cand;
            actions(next + 1);
        }
    }
};

} // namespace

std::vector<TSMap> enumerate_homs(const TransitionSystem& x, const TransitionSystem& y) {
    if (x.state_count() > 0 && y.state_count() == 0) return {};
    HomSearch s(x, y);
    s.actions(0);
    return std::move(s.found);
}

std::size_t count_homs(const TransitionSystem& x, const TransitionSystem& y) {
    return enumerate_homs(x, y).size();
}

TransitionSystem random_cubical(std::mt19937& rng, int max_states) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    const std::vector<Label> labels = {"a", "b"};

    int n_states = 1 + pick(max_states);
    int n_actions = 1 + pick(3);

    TsBuilder b;
    std::vector<StateId> st(n_states);
    for (int i = 0; i < n_states; ++i) st[i] = b.state("s" + std::to_string(i));
    std::vector<ActionId> ac(n_actions);
    std::vector<Label> al(n_actions);
    for (int i = 0; i < n_actions; ++i) {
        al[i] = labels[pick(2)];
        ac[i] = b.action("x" + std::to_string(i), al[i]);
    }

    std::set<Transition> edges;
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a)
            for (int d = 0; d < n_states; ++d)
                if (pick(5) == 0) edges.insert({st[s], {ac[a]}, st[d]});

    // A couple of completed squares add genuine 2-dimensional structure.
    std::set<Transition> squares;
    int attempts = pick(3);
    for (int k = 0; k < attempts && n_actions >= 2; ++k) {
        int u = pick(n_actions), v = pick(n_actions);
        if (u == v) continue;
        StateId a = st[pick(n_states)], d = st[pick(n_states)];
        StateId p = st[pick(n_states)], q = st[pick(n_states)];
        edges.insert({a, {ac[u]}, p});
        edges.insert({p, {ac[v]}, d});
        edges.insert({a, {ac[v]}, q});
        edges.insert({q, {ac[u]}, d});
        squares.insert({a, {ac[u], ac[v]}, d});
        squares.insert({a, {ac[v], ac[u]}, d});
    }

    for (const Transition& t : edges) b.transition(t.src, t.actions, t.dst);
    for (const Transition& t : squares) b.transition(t.src, t.actions, t.dst);
    TransitionSystem draft = b.build();

    // Drop actions with no 1-transition, then reflect to Cattani-Sassone.
    std::set<ActionId> unused = check_all_actions_used(draft);
    TsBuilder c;
    for (const auto& s : draft.states()) c.state(s);
    for (ActionId a = 0; a < draft.action_count(); ++a)
        if (!unused.count(a)) c.action(draft.action_name(a), draft.label(a));
    for (const Transition& t : draft.transitions()) {
        bool keep = true;
        for (ActionId a : t.actions)
            if (unused.count(a)) keep = false;
        if (!keep) continue;
        std::vector<ActionId> acts;
        for (ActionId a : t.actions) acts.push_back(c.action_of(draft.action_name(a)));
        c.transition(c.state_of(draft.state_name(t.src)), std::move(acts),
                     c.state_of(draft.state_name(t.dst)));
    }
    return c.build();
}

TransitionSystem random_cs(std::mt19937& rng, int max_states) {
    return cs_reflect(random_cubical(rng, max_states)).system;
}

PointedTS random_star(std::mt19937& rng, int max_states) {
    TransitionSystem ts = random_cs(rng, max_states);
    std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(ts.state_count() - 1));
    PointedTS pointed(ts, pick(rng));
    return star_coreflect(pointed).system;
}

} // namespace hdts::support
