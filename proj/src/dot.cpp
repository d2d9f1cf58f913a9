#include "hdts/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hdts {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string action_caption(const TransitionSystem& ts, ActionId a) {
    if (ts.action_name(a) == ts.label(a)) return ts.action_name(a);
    return ts.action_name(a) + ":" + ts.label(a);
}

} // namespace

std::string export_dot(const TransitionSystem& ts, const std::string& name,
                       std::optional<StateId> base) {
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n";
    out << "  rankdir=LR;\n";
    for (StateId s = 0; s < ts.state_count(); ++s) {
        out << "  " << quoted(ts.state_name(s)) << " [shape="
            << (base && *base == s ? "doublecircle" : "circle") << "];\n";
    }

    // One box per higher-transition orbit (source, action multiset, target).
    std::map<std::tuple<StateId, std::vector<ActionId>, StateId>, int> orbit;
    int next_box = 0;
    for (const Transition& t : ts.transitions()) {
        if (t.dim() == 1) {
            out << "  " << quoted(ts.state_name(t.src)) << " -> " << quoted(ts.state_name(t.dst))
                << " [label=" << quoted(action_caption(ts, t.actions[0])) << "];\n";
            continue;
        }
        std::vector<ActionId> sorted = t.actions;
        std::sort(sorted.begin(), sorted.end());
        auto key = std::make_tuple(t.src, std::move(sorted), t.dst);
        if (orbit.count(key)) continue;
        int box = next_box++;
        orbit[key] = box;
        std::string box_name = "hyper" + std::to_string(box);
        std::string caption = "{";
        const auto& acts = std::get<1>(key);
        for (std::size_t i = 0; i < acts.size(); ++i) {
            if (i) caption += ",";
            caption += action_caption(ts, acts[i]);
        }
        caption += "}";
        out << "  " << quoted(box_name) << " [shape=box,label=" << quoted(caption) << "];\n";
        out << "  " << quoted(ts.state_name(t.src)) << " -> " << quoted(box_name) << ";\n";
        out << "  " << quoted(box_name) << " -> " << quoted(ts.state_name(t.dst)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const PointedTS& pts, const std::string& name) {
    return export_dot(pts.ts, name, pts.base);
}

} // namespace hdts
