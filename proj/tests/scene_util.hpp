#pragma once
// Small helpers shared by the unit tests: scenes from text, queries by text.

#include <algorithm>
#include <string>
#include <vector>

#include "topos/dsl/loader.hpp"
#include "topos/dsl/parser.hpp"

namespace tt {

using topos::Status;
using Scene = topos::dsl::Scene;

inline topos::dsl::Scene scene(const std::string& text) {
    return topos::dsl::load(topos::dsl::parse(text, "<test>"));
}

inline topos::dsl::Scene scene_file(const std::string& rel) {
    return topos::dsl::load_file(std::string(TOPOS_SOURCE_DIR) + "/scenes/" + rel);
}

inline topos::Literal lit(topos::dsl::Scene& s, const std::string& text) {
    return topos::dsl::resolve_literal(s.kb, topos::dsl::parse_literal(text));
}

inline topos::Verdict ask(topos::dsl::Scene& s, const std::string& text) {
    return s.kb.query(lit(s, text), s.limits);
}

inline Status st(topos::dsl::Scene& s, const std::string& text) { return ask(s, text).status; }

inline std::vector<std::string> axioms(const topos::Kb& kb) {
    std::vector<std::string> out;
    for (const auto& c : kb.conflicts()) out.push_back(c.axiom);
    for (const auto& v : kb.violations()) out.push_back(v.axiom);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool consistent(topos::dsl::Scene& s) {
    s.kb.saturate(s.limits);
    return s.kb.conflicts().empty() && s.kb.violations().empty();
}

// True when some reported axiom label mentions id (labels such as "A20/A21" count).
inline bool names(const topos::Kb& kb, const std::string& id) {
    for (const auto& a : axioms(kb))
        if (a.find(id) != std::string::npos) return true;
    return false;
}

}  // namespace tt
