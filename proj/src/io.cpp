#include "hdts/io.hpp"

#include <algorithm>
#include <sstream>

namespace hdts {

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
      line(line_), column(column_) {}

PointedTS NamedSystem::pointed() const {
    if (!base) throw std::invalid_argument("system '" + name + "' has no base state");
    return PointedTS(system, *base);
}

const NamedSystem& Document::system(const std::string& name) const {
    for (const auto& s : systems)
        if (s.name == name) return s;
    throw std::invalid_argument("no system named '" + name + "'");
}

const NamedMap& Document::map(const std::string& name) const {
    for (const auto& m : maps)
        if (m.name == name) return m;
    throw std::invalid_argument("no map named '" + name + "'");
}

const NamedSystem& Document::only_system() const {
    if (systems.size() != 1)
        throw std::invalid_argument("expected exactly one system, found " +
                                    std::to_string(systems.size()));
    return systems.front();
}

const NamedMap& Document::only_map() const {
    if (maps.size() != 1)
        throw std::invalid_argument("expected exactly one map, found " + std::to_string(maps.size()));
    return maps.front();
}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::string cur;
    int start = 0;
    auto flush = [&](int end_col) {
        if (!cur.empty()) {
            out.push_back({cur, start});
            cur.clear();
        }
        (void)end_col;
    };
    for (int i = 0; i < static_cast<int>(line.size()); ++i) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush(i);
        } else if (c == '[' || c == ']') {
            flush(i);
            out.push_back({std::string(1, c), i + 1});
        } else {
            if (cur.empty()) start = i + 1;
            cur.push_back(c);
        }
    }
    flush(static_cast<int>(line.size()));
    return out;
}

// Accumulates one `ts` block before building.
struct SystemDraft {
    std::string name;
    int decl_line = 0;
    TsBuilder builder;
    std::optional<std::string> base;

    NamedSystem finish() const {
        TransitionSystem ts = builder.build();
        if (base && !ts.state_id(*base))
            throw std::invalid_argument("base '" + *base + "' is not a declared state");
        return {name, std::move(ts), base};
    }
};

struct MapDraft {
    std::string name;
    std::string src_name;
    std::string dst_name;
    int decl_line = 0;
    std::vector<std::pair<std::string, std::string>> state_assignment;
    std::vector<std::pair<std::string, std::string>> action_assignment;
};

} // namespace

Document parse(const std::string& text) {
    Document doc;
    std::optional<SystemDraft> sys;
    std::optional<MapDraft> mapd;

    auto close_map = [&](int line_no) {
        if (!mapd) return;
        const NamedSystem* src = nullptr;
        const NamedSystem* dst = nullptr;
        for (const auto& s : doc.systems) {
            if (s.name == mapd->src_name) src = &s;
            if (s.name == mapd->dst_name) dst = &s;
        }
        if (!src) throw ParseError("map source '" + mapd->src_name + "' is not defined", line_no, 1);
        if (!dst) throw ParseError("map target '" + mapd->dst_name + "' is not defined", line_no, 1);
        try {
            TSMap m = TSMap::by_names(src->system, dst->system, mapd->state_assignment,
                                      mapd->action_assignment);
            doc.maps.push_back({mapd->name, mapd->src_name, mapd->dst_name, std::move(m)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("map '") + mapd->name + "': " + e.what(), mapd->decl_line, 1);
        }
        mapd.reset();
    };
    auto close_system = [&](int line_no) {
        close_map(line_no);
        if (!sys) return;
        try {
            doc.systems.push_back(sys->finish());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("ts '") + sys->name + "': " + e.what(), sys->decl_line, 1);
        }
        sys.reset();
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> tok = tokenize_line(line);
        if (tok.empty()) continue;
        const std::string& head = tok[0].text;
        auto need = [&](std::size_t count, const char* shape) {
            if (tok.size() != count) throw ParseError(std::string("expected '") + shape + "'", line_no, tok[0].column);
        };
        auto lit = [&](std::size_t i, const char* what) {
            if (i >= tok.size() || tok[i].text != what)
                throw ParseError(std::string("expected '") + what + "'", line_no,
                                 i < tok.size() ? tok[i].column : static_cast<int>(line.size()) + 1);
        };

        if (head == "ts") {
            close_system(line_no);
            need(2, "ts NAME");
            for (const auto& s : doc.systems)
                if (s.name == tok[1].text)
                    throw ParseError("duplicate system name '" + tok[1].text + "'", line_no, tok[1].column);
            sys.emplace();
            sys->name = tok[1].text;
            sys->decl_line = line_no;
        } else if (head == "map") {
            close_system(line_no);
            need(6, "map NAME : SRC -> DST");
            lit(2, ":");
            lit(4, "->");
            for (const auto& m : doc.maps)
                if (m.name == tok[1].text)
                    throw ParseError("duplicate map name '" + tok[1].text + "'", line_no, tok[1].column);
            mapd.emplace();
            mapd->name = tok[1].text;
            mapd->src_name = tok[3].text;
            mapd->dst_name = tok[5].text;
            mapd->decl_line = line_no;
        } else if (head == "state") {
            if (!sys) throw ParseError("'state' outside a ts block", line_no, tok[0].column);
            need(2, "state ID");
            sys->builder.state(tok[1].text);
        } else if (head == "action") {
            if (!sys) throw ParseError("'action' outside a ts block", line_no, tok[0].column);
            need(4, "action ID : LABEL");
            lit(2, ":");
            try {
                sys->builder.action(tok[1].text, tok[3].text);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no, tok[1].column);
            }
        } else if (head == "trans") {
            if (!sys) throw ParseError("'trans' outside a ts block", line_no, tok[0].column);
            if (tok.size() < 6) throw ParseError("expected 'trans SRC [ ACT ... ] DST'", line_no, tok[0].column);
            lit(2, "[");
            if (tok[tok.size() - 2].text != "]")
                throw ParseError("expected ']' before the target state", line_no, tok.back().column);
            if (!sys->builder.has_state(tok[1].text))
                throw ParseError("undeclared state '" + tok[1].text + "'", line_no, tok[1].column);
            if (!sys->builder.has_state(tok.back().text))
                throw ParseError("undeclared state '" + tok.back().text + "'", line_no, tok.back().column);
            std::vector<ActionId> acts;
            for (std::size_t i = 3; i + 2 < tok.size(); ++i) {
                if (!sys->builder.has_action(tok[i].text))
                    throw ParseError("undeclared action '" + tok[i].text + "'", line_no, tok[i].column);
                acts.push_back(sys->builder.action_of(tok[i].text));
            }
            if (acts.empty()) throw ParseError("transition needs at least one action", line_no, tok[2].column);
            sys->builder.transition(sys->builder.state_of(tok[1].text), std::move(acts),
                                    sys->builder.state_of(tok.back().text));
        } else if (head == "base") {
            if (!sys) throw ParseError("'base' outside a ts block", line_no, tok[0].column);
            need(2, "base ID");
            sys->base = tok[1].text;
        } else if (head == "s") {
            if (!mapd) throw ParseError("'s' outside a map block", line_no, tok[0].column);
            need(4, "s ID -> ID");
            lit(2, "->");
            mapd->state_assignment.push_back({tok[1].text, tok[3].text});
        } else if (head == "a") {
            if (!mapd) throw ParseError("'a' outside a map block", line_no, tok[0].column);
            need(4, "a ID -> ID");
            lit(2, "->");
            mapd->action_assignment.push_back({tok[1].text, tok[3].text});
        } else {
            throw ParseError("unknown declaration '" + head + "'", line_no, tok[0].column);
        }
    }
    close_system(line_no + 1);
    return doc;
}

std::string render(const TransitionSystem& ts, const std::string& name) {
    std::ostringstream out;
    out << "ts " << name << "\n";
    for (const auto& s : ts.states()) out << "state " << s << "\n";
    for (const auto& a : ts.actions()) out << "action " << a.name << " : " << a.label << "\n";
    for (const Transition& t : ts.transitions()) {
        out << "trans " << ts.state_name(t.src) << " [";
        for (ActionId a : t.actions) out << " " << ts.action_name(a);
        out << " ] " << ts.state_name(t.dst) << "\n";
    }
    return out.str();
}

std::string render(const PointedTS& pts, const std::string& name) {
    std::string out = render(pts.ts, name);
    out += "base " + pts.base_name() + "\n";
    return out;
}

std::string render(const TSMap& map, const std::string& name,
                   const std::string& src_name, const std::string& dst_name) {
    std::ostringstream out;
    out << "map " << name << " : " << src_name << " -> " << dst_name << "\n";
    for (StateId s = 0; s < map.src().state_count(); ++s)
        out << "s " << map.src().state_name(s) << " -> " << map.dst().state_name(map.on_state(s)) << "\n";
    for (ActionId a = 0; a < map.src().action_count(); ++a)
        out << "a " << map.src().action_name(a) << " -> " << map.dst().action_name(map.on_action(a)) << "\n";
    return out.str();
}

std::string render(const Document& doc) {
    std::string out;
    bool first = true;
    for (const auto& s : doc.systems) {
        if (!first) out += "\n";
        first = false;
        out += s.base ? render(PointedTS(s.system, *s.base), s.name) : render(s.system, s.name);
    }
    for (const auto& m : doc.maps) {
        if (!first) out += "\n";
        first = false;
        out += render(m.map, m.name, m.src_name, m.dst_name);
    }
    return out;
}

} // namespace hdts
