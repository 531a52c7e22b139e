#include "topos/terms.hpp"

#include <algorithm>
#include <stdexcept>

namespace topos {

uint32_t UnionFind::add() {
    parent_.push_back(uint32_t(parent_.size()));
    return parent_.back();
}

uint32_t UnionFind::find(uint32_t x) const {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
}

TermStore::TermStore() {
    Term u;
    u.kind = TermKind::Universal;
    terms_.push_back(u);
    uf_.add();
    index_.emplace(key_of(u), 0);
}

TermStore::Key TermStore::key_of(const Term& t) const {
    std::vector<IndId> args;
    args.reserve(t.args.size());
    for (IndId a : t.args) args.push_back(uf_.find(a));
    if (t.kind == TermKind::Sum || t.kind == TermKind::Inter) {
        std::sort(args.begin(), args.end());
        args.erase(std::unique(args.begin(), args.end()), args.end());
    }
    return {t.kind, t.entity, std::move(args), t.tag};
}

IndId TermStore::intern(Term t, int depth_limit) {
    int d = 0;
    for (IndId a : t.args) d = std::max(d, terms_[a].depth + 1);
    t.depth = d;
    auto key = key_of(t);
    if (auto it = index_.find(key); it != index_.end()) return uf_.find(it->second);
    if (depth_limit >= 0 && d > depth_limit)
        throw TermError("term depth " + std::to_string(d) + " exceeds limit " +
                        std::to_string(depth_limit));
    IndId id = IndId(terms_.size());
    terms_.push_back(std::move(t));
    uf_.add();
    index_.emplace(std::move(key), id);
    return id;
}

IndId TermStore::atom(EntityId e) {
    Term t;
    t.kind = TermKind::Atom;
    t.entity = e;
    return intern(std::move(t), -1);
}

std::optional<IndId> TermStore::atom_of(EntityId e) const {
    Term t;
    t.kind = TermKind::Atom;
    t.entity = e;
    if (auto it = index_.find(key_of(t)); it != index_.end()) return uf_.find(it->second);
    return std::nullopt;
}

IndId TermStore::sum(const std::vector<IndId>& parts, int depth_limit) {
    std::vector<IndId> flat;
    for (IndId p : parts) {
        IndId c = uf_.find(p);
        if (c == universal()) return universal();
        if (terms_[c].kind == TermKind::Sum) {
            for (IndId q : terms_[c].args) flat.push_back(uf_.find(q));
        } else {
            flat.push_back(c);
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) throw TermError("empty sum");
    if (flat.size() == 1) return flat.front();
    Term t;
    t.kind = TermKind::Sum;
    t.args = std::move(flat);
    return intern(std::move(t), depth_limit);
}

IndId TermStore::inter(IndId a, IndId b, int depth_limit) {
    a = uf_.find(a);
    b = uf_.find(b);
    if (a == b) return a;
    if (a == universal()) return b;
    if (b == universal()) return a;
    Term t;
    t.kind = TermKind::Inter;
    t.args = {std::min(a, b), std::max(a, b)};
    return intern(std::move(t), depth_limit);
}

IndId TermStore::compl_of(IndId a, int depth_limit) {
    a = uf_.find(a);
    if (a == universal()) throw TermError("A6: the universal individual has no complement");
    if (terms_[a].kind == TermKind::Compl) return uf_.find(terms_[a].args[0]);
    Term t;
    t.kind = TermKind::Compl;
    t.args = {a};
    return intern(std::move(t), depth_limit);
}

IndId TermStore::interior(IndId a, int depth_limit) {
    a = uf_.find(a);
    if (terms_[a].kind == TermKind::Interior) return a;
    Term t;
    t.kind = TermKind::Interior;
    t.args = {a};
    return intern(std::move(t), depth_limit);
}

IndId TermStore::closure(IndId a, int depth_limit) {
    a = uf_.find(a);
    if (a == universal()) return a;
    if (terms_[a].kind == TermKind::Closure) return a;
    Term t;
    t.kind = TermKind::Closure;
    t.args = {a};
    return intern(std::move(t), depth_limit);
}

IndId TermStore::skolem(const std::string& tag, const std::vector<IndId>& args, int depth_limit) {
    Term t;
    t.kind = TermKind::Skolem;
    t.tag = tag;
    for (IndId a : args) t.args.push_back(uf_.find(a));
    return intern(std::move(t), depth_limit);
}

std::optional<IndId> TermStore::find_existing(TermKind kind, const std::vector<IndId>& args,
                                              const std::string& tag) const {
    Term t;
    t.kind = kind;
    t.args = args;
    t.tag = tag;
    if (kind == TermKind::Sum) {
        for (auto& a : t.args) a = uf_.find(a);
        std::sort(t.args.begin(), t.args.end());
        t.args.erase(std::unique(t.args.begin(), t.args.end()), t.args.end());
        if (t.args.size() == 1) return t.args.front();
    }
    if (auto it = index_.find(key_of(t)); it != index_.end()) return uf_.find(it->second);
    return std::nullopt;
}

std::vector<std::pair<IndId, IndId>> TermStore::merge(IndId a, IndId b) {
    std::vector<std::pair<IndId, IndId>> merged;
    if (!uf_.unite(a, b)) return merged;
    merged.emplace_back(uf_.find(a), uf_.find(b));
    // congruence closure by re-keying until no two keys collide
    bool again = true;
    while (again) {
        again = false;
        std::map<Key, IndId> fresh;
        for (IndId i = 0; i < terms_.size(); ++i) {
            auto key = key_of(terms_[i]);
            auto [it, inserted] = fresh.emplace(std::move(key), i);
            if (!inserted && uf_.find(it->second) != uf_.find(i)) {
                merged.emplace_back(it->second, i);
                uf_.unite(it->second, i);
                again = true;
            }
        }
        index_ = std::move(fresh);
    }
    return merged;
}

std::vector<IndId> TermStore::representatives() const {
    std::vector<IndId> out;
    for (IndId i = 0; i < terms_.size(); ++i)
        if (uf_.find(i) == i) out.push_back(i);
    return out;
}

DirStore::DirStore() {
    declare("haut-grav");
    // D39: bas-grav is the opposite of haut-grav, so it is id 1 by construction
}

DirId DirStore::declare(const std::string& name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    DirId id = DirId(names_.size() * 2);
    names_.push_back(name);
    uf_.add();
    uf_.add();
    index_.emplace(name, id);
    return id;
}

std::optional<DirId> DirStore::find(const std::string& name) const {
    if (name == "bas-grav") return bas();
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return std::nullopt;
}

bool DirStore::merge(DirId a, DirId b) {
    bool changed = uf_.unite(a, b);
    changed |= uf_.unite(a ^ 1u, b ^ 1u);
    return changed;
}

std::string DirStore::name(DirId d) const {
    if (d == bas()) return "bas-grav";
    const std::string& base = names_[d / 2];
    return (d & 1u) ? "opp(" + base + ")" : base;
}

std::vector<DirId> DirStore::representatives() const {
    std::vector<DirId> out;
    for (DirId i = 0; i < size(); ++i)
        if (uf_.find(i) == i) out.push_back(i);
    return out;
}

std::vector<DirId> DirStore::atomic() const {
    std::vector<DirId> out;
    for (DirId i = 0; i < size(); i += 2) out.push_back(i);
    return out;
}

}  // namespace topos
