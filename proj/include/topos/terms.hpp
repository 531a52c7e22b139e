#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace topos {

using EntityId = uint32_t;
using IndId = uint32_t;
using DirId = uint32_t;
using FactId = uint32_t;
inline constexpr uint32_t kNone = UINT32_MAX;

class UnionFind {
public:
    uint32_t add();
    uint32_t find(uint32_t x) const;
    // Smaller representative wins so that merges are order independent.
    bool unite(uint32_t a, uint32_t b);
    size_t size() const { return parent_.size(); }

private:
    mutable std::vector<uint32_t> parent_;
};

enum class TermKind : uint8_t { Atom, Sum, Inter, Compl, Interior, Closure, Universal, Skolem };

struct Term {
    TermKind kind = TermKind::Atom;
    EntityId entity = kNone;  // Atom only
    std::vector<IndId> args;  // sorted for Sum
    std::string tag;          // Skolem only
    int depth = 0;
};

class TermError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Individuals with hash-consing and congruence closure over =s.
class TermStore {
public:
    TermStore();

    IndId universal() const { return 0; }
    IndId atom(EntityId e);
    IndId sum(const std::vector<IndId>& parts, int depth_limit);
    IndId inter(IndId a, IndId b, int depth_limit);  // caller checks A7
    IndId compl_of(IndId a, int depth_limit);
    IndId interior(IndId a, int depth_limit);
    IndId closure(IndId a, int depth_limit);
    IndId skolem(const std::string& tag, const std::vector<IndId>& args, int depth_limit);

    std::optional<IndId> find_existing(TermKind kind, const std::vector<IndId>& args,
                                       const std::string& tag = {}) const;
    std::optional<IndId> atom_of(EntityId e) const;

    IndId canon(IndId x) const { return uf_.find(x); }
    // Merges two classes; returns pairs merged by congruence as well.
    std::vector<std::pair<IndId, IndId>> merge(IndId a, IndId b);

    const Term& term(IndId x) const { return terms_[x]; }
    size_t size() const { return terms_.size(); }
    std::vector<IndId> representatives() const;

private:
    using Key = std::tuple<TermKind, EntityId, std::vector<IndId>, std::string>;
    Key key_of(const Term& t) const;
    IndId intern(Term t, int depth_limit);
    void rehash();

    std::vector<Term> terms_;
    UnionFind uf_;
    std::map<Key, IndId> index_;
};

// Directions: every atomic name k owns ids 2k (itself) and 2k+1 (its opposite).
class DirStore {
public:
    DirStore();
    DirId haut() const { return 0; }
    DirId bas() const { return 1; }
    DirId declare(const std::string& name);
    std::optional<DirId> find(const std::string& name) const;
    DirId opposite(DirId d) const { return d ^ 1u; }
    DirId canon(DirId d) const { return uf_.find(d); }
    bool merge(DirId a, DirId b);
    std::string name(DirId d) const;
    size_t size() const { return names_.size() * 2; }
    std::vector<DirId> representatives() const;
    // Named ids only (even ids), in declaration order.
    std::vector<DirId> atomic() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, DirId> index_;
    UnionFind uf_;
};

}  // namespace topos
