#include "topos/meronymy.hpp"

#include <fstream>
#include <sstream>

#include "topos/engine.hpp"

namespace topos {

Rel kind_rel(MeronymyKind k) {
    switch (k) {
    case MeronymyKind::Member: return Rel::Member;
    case MeronymyKind::Subcoll: return Rel::Subcoll;
    case MeronymyKind::Portion: return Rel::Portion;
    case MeronymyKind::SubstWh: return Rel::SubstWh;
    case MeronymyKind::Component: return Rel::Component;
    case MeronymyKind::Piece: return Rel::Piece;
    }
    return Rel::Part;
}

std::optional<MeronymyKind> kind_of(Rel r) {
    for (int i = 0; i < kMeronymyKinds; ++i)
        if (kind_rel(MeronymyKind(i)) == r) return MeronymyKind(i);
    return std::nullopt;
}

std::string_view kind_name(MeronymyKind k) { return rel_name(kind_rel(k)); }

std::optional<MeronymyKind> parse_kind(std::string_view s) {
    auto r = find_rel(s);
    if (!r) return std::nullopt;
    return kind_of(*r);
}

void CompositionTable::clear() {
    for (auto& row : cells_) row.fill(-1);
    initialized_ = true;
}

CompositionTable CompositionTable::defaults() {
    using K = MeronymyKind;
    CompositionTable t;
    t.clear();
    t.set(K::Component, K::Component, K::Component);
    t.set(K::Piece, K::Piece, K::Piece);
    t.set(K::Subcoll, K::Subcoll, K::Subcoll);
    t.set(K::Portion, K::Portion, K::Portion);
    t.set(K::Member, K::Subcoll, K::Member);
    return t;
}

std::optional<MeronymyKind> CompositionTable::compose(MeronymyKind first, MeronymyKind second) const {
    if (!initialized_) return defaults().compose(first, second);
    int8_t v = cells_[size_t(first)][size_t(second)];
    if (v < 0) return std::nullopt;
    return MeronymyKind(v);
}

void CompositionTable::set(MeronymyKind first, MeronymyKind second, std::optional<MeronymyKind> result) {
    if (!initialized_) clear();
    cells_[size_t(first)][size_t(second)] = result ? int8_t(*result) : int8_t(-1);
}

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

CompositionTable CompositionTable::parse(const std::string& text) {
    CompositionTable t;
    t.clear();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto where = "composition table line " + std::to_string(lineno) + ": ";
        auto semi = line.find(';');
        auto arrow = line.find("->");
        if (semi == std::string::npos || arrow == std::string::npos || arrow < semi)
            throw KbError(where + "expected '<Kind> ; <Kind> -> <Kind>'");
        auto k1 = parse_kind(trim(line.substr(0, semi)));
        auto k2 = parse_kind(trim(line.substr(semi + 1, arrow - semi - 1)));
        std::string rhs = trim(line.substr(arrow + 2));
        if (!k1 || !k2) throw KbError(where + "unknown meronymy kind");
        if (rhs == "none") {
            t.set(*k1, *k2, std::nullopt);
            continue;
        }
        auto k3 = parse_kind(rhs);
        if (!k3) throw KbError(where + "unknown meronymy kind '" + rhs + "'");
        t.set(*k1, *k2, *k3);
    }
    return t;
}

CompositionTable CompositionTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw KbError("cannot open composition table '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string CompositionTable::str() const {
    std::string out;
    for (int i = 0; i < kMeronymyKinds; ++i)
        for (int j = 0; j < kMeronymyKinds; ++j)
            if (auto k = compose(MeronymyKind(i), MeronymyKind(j)))
                out += std::string(kind_name(MeronymyKind(i))) + " ; " + std::string(kind_name(MeronymyKind(j))) +
                       " -> " + std::string(kind_name(*k)) + "\n";
    return out;
}

namespace {

bool is_collection(const Kb& kb, EntityId y) {
    if (kb.entity(y).cls == EntityClass::Plural) return true;
    if (kb.entities().is_coll.count(kb.canon_entity(y))) return true;
    return kb.status(make_atom(Rel::Coll, y)) == Status::Entailed;
}

std::optional<EntityId> substance(const Kb& kb, EntityId x) {
    const auto& q = kb.entities().quantity;
    if (auto it = q.find(kb.canon_entity(x)); it != q.end()) return kb.canon_entity(it->second);
    return std::nullopt;
}

}  // namespace

void assert_part(Kb& kb, MeronymyKind kind, EntityId x, EntityId y) {
    x = kb.canon_entity(x);
    y = kb.canon_entity(y);
    std::string what = std::string(kind_name(kind)) + "(" + kb.ent_str(x) + ", " + kb.ent_str(y) + "): ";
    switch (kind) {
    case MeronymyKind::Member:
    case MeronymyKind::Subcoll:
        if (!is_collection(kb, y)) throw KbError(what + "the whole must be a collection", "D36");
        if (kind == MeronymyKind::Subcoll && kb.entity(x).cls != EntityClass::Plural && !kb.entities().is_coll.count(x))
            throw KbError(what + "a subcollection must be a collection", "D36");
        break;
    case MeronymyKind::Portion: {
        auto sx = substance(kb, x), sy = substance(kb, y);
        if (!sx || !sy || *sx != *sy) throw KbError(what + "part and whole need a common substance", "D36");
        break;
    }
    case MeronymyKind::SubstWh:
        if (kb.entity(x).cls != EntityClass::Subst) throw KbError(what + "the part must be a substance", "D36");
        break;
    case MeronymyKind::Component:
    case MeronymyKind::Piece:
        if (x == y) throw KbError(what + "part and whole must differ", "D36");
        if (kb.entity(x).cls == EntityClass::Subst || kb.entity(y).cls == EntityClass::Subst)
            throw KbError(what + "substances are not components or pieces", "D36");
        break;
    }
    kb.derive(make_atom(kind_rel(kind), x, y), true, RuleId::Asserted, {});
}

std::vector<PartFact> derive_parts(Kb& kb) {
    if (!kb.saturated()) kb.saturate(kb.limits());
    std::vector<PartFact> out;
    for (int i = 0; i < kMeronymyKinds; ++i) {
        auto k = MeronymyKind(i);
        for (FactId f : kb.facts_of(kind_rel(k), true)) {
            const Fact& fact = kb.fact(f);
            if (fact.alias_of != kNone) continue;
            out.push_back({k, fact.atom.a[0], fact.atom.a[1], fact.rule == RuleId::Asserted});
        }
    }
    return out;
}

std::vector<PartFact> part_transitive_closure(Kb& kb) {
    auto all = derive_parts(kb);
    std::vector<PartFact> out;
    for (const auto& p : all)
        if (!p.asserted) out.push_back(p);
    return out;
}

}  // namespace topos
