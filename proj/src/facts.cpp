#include "topos/facts.hpp"

namespace topos {

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Entailed: return "entailed";
    case Status::Refuted: return "refuted";
    case Status::Unknown: return "unknown";
    }
    return "?";
}

std::optional<Status> parse_status(std::string_view s) {
    if (s == "entailed") return Status::Entailed;
    if (s == "refuted") return Status::Refuted;
    if (s == "unknown") return Status::Unknown;
    return std::nullopt;
}

Atom make_atom(Rel r, uint32_t a0, uint32_t a1, uint32_t a2, uint32_t a3) {
    Atom a;
    a.rel = r;
    a.a = {a0, a1, a2, a3};
    return a;
}

Atom make_allen(IndId x, IndId y, DirId d, AllenSet s) {
    Atom a = make_atom(Rel::Allen, x, y, d);
    a.mask = s.bits();
    return a;
}

size_t AtomHash::operator()(const Atom& a) const noexcept {
    uint64_t h = uint64_t(a.rel) * 0x9e3779b97f4a7c15ull ^ a.mask;
    for (uint32_t x : a.a) h = (h ^ x) * 0x100000001b3ull + 0x7f4a7c15u;
    return size_t(h ^ (h >> 29));
}

std::optional<FactId> FactStore::find(const Atom& canonical, bool positive) const {
    const auto& m = positive ? pos_ : neg_;
    if (auto it = m.find(canonical); it != m.end()) return it->second;
    return std::nullopt;
}

uint64_t FactStore::arg_key(Rel r, bool positive, int pos, uint32_t arg) {
    return (uint64_t(r) << 40) | (uint64_t(positive) << 39) | (uint64_t(pos) << 34) | arg;
}

uint64_t FactStore::allen_key(IndId x, IndId y, DirId d) {
    return (uint64_t(x) << 40) ^ (uint64_t(y) << 20) ^ uint64_t(d) ^ (uint64_t(d) << 58);
}

FactId FactStore::insert(Fact f) {
    FactId id = FactId(facts_.size());
    facts_.push_back(std::move(f));
    index(id);
    return id;
}

void FactStore::index(FactId id) {
    const Fact& f = facts_[id];
    (f.positive ? pos_ : neg_).emplace(f.atom, id);
    (f.positive ? by_rel_pos_ : by_rel_neg_)[size_t(f.atom.rel)].push_back(id);
    int n = arity(f.atom.rel);
    for (int i = 0; i < n; ++i) by_arg_[arg_key(f.atom.rel, f.positive, i, f.atom.a[i])].push_back(id);
}

std::optional<FactId> FactStore::allen_best(IndId x, IndId y, DirId d) const {
    if (auto it = allen_.find(allen_key(x, y, d)); it != allen_.end()) {
        const Atom& a = facts_[it->second].atom;
        if (a.a[0] == x && a.a[1] == y && a.a[2] == d) return it->second;
    }
    return std::nullopt;
}

void FactStore::set_allen_best(FactId id) {
    const Atom& a = facts_[id].atom;
    allen_[allen_key(a.a[0], a.a[1], a.a[2])] = id;
}

const std::vector<FactId>& FactStore::by_rel(Rel r, bool positive) const {
    return (positive ? by_rel_pos_ : by_rel_neg_)[size_t(r)];
}

const std::vector<FactId>& FactStore::by_arg(Rel r, bool positive, int pos, uint32_t arg) const {
    static const std::vector<FactId> empty;
    if (auto it = by_arg_.find(arg_key(r, positive, pos, arg)); it != by_arg_.end()) return it->second;
    return empty;
}

std::vector<std::pair<FactId, FactId>> FactStore::rekey(const Canon& canon) {
    std::vector<std::pair<FactId, FactId>> clashes;
    pos_.clear();
    neg_.clear();
    allen_.clear();
    by_arg_.clear();
    for (auto& v : by_rel_pos_) v.clear();
    for (auto& v : by_rel_neg_) v.clear();
    for (FactId id = 0; id < facts_.size(); ++id) {
        Fact& f = facts_[id];
        if (f.alias_of != kNone) continue;
        f.atom = canon(f.atom);
        auto& same = f.positive ? pos_ : neg_;
        if (auto it = same.find(f.atom); it != same.end()) {
            f.alias_of = it->second;
            continue;
        }
        if (f.atom.rel != Rel::Allen) {
            auto& other = f.positive ? neg_ : pos_;
            if (auto it = other.find(f.atom); it != other.end()) clashes.emplace_back(it->second, id);
        }
        index(id);
    }
    return clashes;
}

}  // namespace topos
