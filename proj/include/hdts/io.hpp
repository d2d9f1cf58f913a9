#pragma once

#include "hdts/star.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdts {

// Line-oriented text format, one declaration per line, '#' comments:
//
//   ts NAME
//   state ID
//   action ID : LABEL
//   trans SRC [ ACT ... ] DST
//   base ID                         (optional; makes the system pointed)
//
//   map NAME : SRC_TS -> DST_TS
//   s ID -> ID
//   a ID -> ID
//
// A file may contain several blocks; maps refer to systems by name.
// render is canonical (sorted declarations), and parse(render(d)) == d.

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_);
};

struct NamedSystem {
    std::string name;
    TransitionSystem system;
    std::optional<std::string> base;  // state name

    PointedTS pointed() const;
};

struct NamedMap {
    std::string name;
    std::string src_name;
    std::string dst_name;
    TSMap map;
};

struct Document {
    std::vector<NamedSystem> systems;
    std::vector<NamedMap> maps;

    const NamedSystem& system(const std::string& name) const;
    const NamedMap& map(const std::string& name) const;
    const NamedSystem& only_system() const;   // exactly one, else throws
    const NamedMap& only_map() const;
};

Document parse(const std::string& text);

std::string render(const Document& doc);
std::string render(const TransitionSystem& ts, const std::string& name);
std::string render(const PointedTS& pts, const std::string& name);
std::string render(const TSMap& map, const std::string& name,
                   const std::string& src_name, const std::string& dst_name);

} // namespace hdts
