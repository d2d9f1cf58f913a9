#include "hdts/builders.hpp"

#include "hdts/homotopy.hpp"

#include <algorithm>
#include <bit>

namespace hdts {

namespace {

std::string bits_name(unsigned value, std::size_t n) {
    if (n == 0) return "e";
    std::string name(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if (value & (1u << i)) name[i] = '1';
    return name;
}

std::string indexed_action(const Label& label, std::size_t i) {
    return label + std::to_string(i);
}

} // namespace

TransitionSystem cube(const std::vector<Label>& labels) {
    const std::size_t n = labels.size();
    if (n >= 26) throw std::invalid_argument("cube dimension exceeds the carrier bit width");
    TsBuilder b;
    std::vector<StateId> states(1u << n);
    for (unsigned v = 0; v < (1u << n); ++v) states[v] = b.state(bits_name(v, n));
    std::vector<ActionId> acts(n);
    for (std::size_t i = 0; i < n; ++i) acts[i] = b.action(indexed_action(labels[i], i + 1), labels[i]);

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> flipped;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) flipped.push_back(i);
        // Free coordinates range over all assignments; flipped ones go 0 -> 1.
        unsigned free_mask = ((1u << n) - 1u) & ~mask;
        for (unsigned sub = free_mask;; sub = (sub - 1) & free_mask) {
            std::sort(flipped.begin(), flipped.end());
            do {
                std::vector<ActionId> list;
                list.reserve(flipped.size());
                for (std::size_t i : flipped) list.push_back(acts[i]);
                b.transition(states[sub], std::move(list), states[sub | mask]);
            } while (std::next_permutation(flipped.begin(), flipped.end()));
            if (sub == 0) break;
        }
    }
    return b.build();
}

TransitionSystem boundary(const std::vector<Label>& labels) {
    if (labels.empty()) throw std::invalid_argument("boundary needs at least one label");
    TransitionSystem full = cube(labels);
    TsBuilder b;
    for (const auto& s : full.states()) b.state(s);
    for (const auto& a : full.actions()) b.action(a.name, a.label);
    for (const Transition& t : full.transitions())
        if (t.dim() < labels.size()) b.transition(t.src, t.actions, t.dst);
    return b.build();
}

TransitionSystem pure_transition(const std::vector<Label>& labels) {
    const std::size_t n = labels.size();
    TsBuilder b;
    StateId bot = b.state(bits_name(0, n));
    StateId top = b.state(bits_name((1u << n) - 1u, n));
    std::vector<ActionId> acts(n);
    for (std::size_t i = 0; i < n; ++i) acts[i] = b.action(indexed_action(labels[i], i + 1), labels[i]);
    if (n > 0) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        do {
            std::vector<ActionId> list;
            list.reserve(n);
            for (std::size_t i : order) list.push_back(acts[i]);
            b.transition(bot, std::move(list), top);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return b.build();
}

TransitionSystem double_transition(const Label& label) {
    TsBuilder b;
    StateId s1 = b.state("1");
    StateId s2 = b.state("2");
    StateId s3 = b.state("3");
    StateId s4 = b.state("4");
    ActionId x = b.action(label, label);
    b.transition(s1, {x}, s2);
    b.transition(s3, {x}, s4);
    return b.build();
}

TransitionSystem discrete(const std::set<std::string>& names) {
    TsBuilder b;
    for (const auto& n : names) b.state(n);
    return b.build();
}

PointedTS path(const Word& word) {
    TsBuilder b;
    std::vector<StateId> states(word.size() + 1);
    for (std::size_t i = 0; i <= word.size(); ++i) states[i] = b.state(std::to_string(i));
    for (std::size_t i = 0; i < word.size(); ++i) {
        ActionId a = b.action(indexed_action(word[i], i + 1), word[i]);
        b.transition(states[i], {a}, states[i + 1]);
    }
    return PointedTS(b.build(), "0");
}

PointedTS collapsed_cylinder_path(const Word& word) {
    if (word.empty()) throw std::invalid_argument("collapsed cylinder needs a nonempty word");
    PointedCylinderResult c = cyl_pointed(path(word));
    const TransitionSystem& cyl = c.cyl.ts;

    Partition states(cyl.state_count());
    std::string end = std::to_string(word.size());
    states.merge(*cyl.state_id(end + "@0"), *cyl.state_id(end + "@1"));
    Partition actions(cyl.action_count());

    PointedQuotientResult q = quotient_pointed(c.cyl, states, actions);
    return q.system;
}

} // namespace hdts
