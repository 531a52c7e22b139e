#include "topos/relations.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

namespace topos {

namespace {

std::vector<Sort> parse_sig(std::string_view s) {
    std::vector<Sort> out;
    for (char c : s) {
        if (c == 'e') out.push_back(Sort::Entity);
        else if (c == 'i') out.push_back(Sort::Individual);
        else out.push_back(Sort::Direction);
    }
    return out;
}

const std::vector<RelInfo>& table() {
    static const std::vector<RelInfo> t = {
#define TOPOS_REL_INFO(e, n, s, m) RelInfo{Rel::e, n, parse_sig(s), m},
        TOPOS_RELATIONS(TOPOS_REL_INFO)
#undef TOPOS_REL_INFO
    };
    return t;
}

std::string fold(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '-' || c == '_') continue;
        out += char(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

const RelInfo& rel_info(Rel r) { return table()[size_t(r)]; }
std::string_view rel_name(Rel r) { return rel_info(r).name; }

std::optional<Rel> find_rel(std::string_view name) {
    static const auto index = [] {
        std::unordered_map<std::string, Rel> exact, folded;
        for (const auto& info : table()) {
            exact.emplace(std::string(info.name), info.rel);
            folded.emplace(fold(info.name), info.rel);
        }
        folded.emplace("intrinsicstabilizer", Rel::IntrinsicStabilizer);
        folded.emplace("spport", Rel::SpPort);
        folded.emplace("medmember", Rel::InMed);
        return std::pair{exact, folded};
    }();
    if (auto it = index.first.find(std::string(name)); it != index.first.end()) return it->second;
    if (auto it = index.second.find(fold(name)); it != index.second.end()) return it->second;
    return std::nullopt;
}

const std::vector<Rel>& all_relations() {
    static const std::vector<Rel> all = [] {
        std::vector<Rel> v;
        for (const auto& info : table()) v.push_back(info.rel);
        return v;
    }();
    return all;
}

bool is_entity_class(Rel r) {
    return r == Rel::Obj || r == Rel::Mat || r == Rel::Subst || r == Rel::Loc || r == Rel::SpPort;
}

bool is_part_kind(Rel r) {
    return r == Rel::Member || r == Rel::Subcoll || r == Rel::Portion || r == Rel::SubstWh ||
           r == Rel::Component || r == Rel::Piece;
}

bool is_symmetric(Rel r) {
    return r == Rel::C || r == Rel::O || r == Rel::EC || r == Rel::Sp || r == Rel::ICont ||
           r == Rel::Eqs || r == Rel::DirEq;
}

std::string_view sort_name(Sort s) {
    switch (s) {
    case Sort::Entity: return "entity";
    case Sort::Individual: return "individual";
    case Sort::Direction: return "direction";
    }
    return "?";
}

}  // namespace topos
