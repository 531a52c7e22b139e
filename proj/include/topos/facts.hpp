#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "topos/allen.hpp"
#include "topos/relations.hpp"
#include "topos/rules.hpp"
#include "topos/terms.hpp"

namespace topos {

enum class Status : uint8_t { Entailed, Refuted, Unknown };
std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view s);

struct Atom {
    Rel rel = Rel::C;
    uint16_t mask = 0;  // Allen only
    std::array<uint32_t, 4> a{kNone, kNone, kNone, kNone};

    bool operator==(const Atom&) const = default;
};

Atom make_atom(Rel r, uint32_t a0, uint32_t a1 = kNone, uint32_t a2 = kNone, uint32_t a3 = kNone);
Atom make_allen(IndId x, IndId y, DirId d, AllenSet s);

struct AtomHash {
    size_t operator()(const Atom& a) const noexcept;
};

enum class Layer : uint8_t { Asserted, Monotone, Closure, Default };

struct Fact {
    Atom atom;  // canonical at indexing time
    bool positive = true;
    RuleId rule = RuleId::Asserted;
    std::vector<FactId> premises;
    std::vector<uint32_t> defaults;  // sorted ids of defaults the fact depends on
    Layer layer = Layer::Monotone;
    std::string note;
    FactId alias_of = kNone;  // set when a merge made this fact a duplicate
};

struct Conflict {
    FactId positive = kNone;
    FactId negative = kNone;
    std::string axiom;    // violated axiom label
    std::string message;
};

// Fact table with canonical-key indexes. Canonicalization is supplied by the owner.
class FactStore {
public:
    using Canon = std::function<Atom(const Atom&)>;

    size_t size() const { return facts_.size(); }
    const Fact& operator[](FactId id) const { return facts_[id]; }
    Fact& mut(FactId id) { return facts_[id]; }

    std::optional<FactId> find(const Atom& canonical, bool positive) const;
    // Appends and indexes a fact whose atom is already canonical and new.
    FactId insert(Fact f);

    // Allen facts: tightest known mask per (x, y, D).
    std::optional<FactId> allen_best(IndId x, IndId y, DirId d) const;
    void set_allen_best(FactId id);

    const std::vector<FactId>& by_rel(Rel r, bool positive) const;
    const std::vector<FactId>& by_arg(Rel r, bool positive, int pos, uint32_t arg) const;

    // Re-keys every fact after a merge. Returns conflicts between facts that now collide.
    std::vector<std::pair<FactId, FactId>> rekey(const Canon& canon);

    std::vector<Conflict>& conflicts() { return conflicts_; }
    const std::vector<Conflict>& conflicts() const { return conflicts_; }

private:
    void index(FactId id);
    static uint64_t arg_key(Rel r, bool positive, int pos, uint32_t arg);
    static uint64_t allen_key(IndId x, IndId y, DirId d);

    std::vector<Fact> facts_;
    std::unordered_map<Atom, FactId, AtomHash> pos_, neg_;
    std::unordered_map<uint64_t, FactId> allen_;
    std::vector<std::vector<FactId>> by_rel_pos_ = std::vector<std::vector<FactId>>(kRelCount);
    std::vector<std::vector<FactId>> by_rel_neg_ = std::vector<std::vector<FactId>>(kRelCount);
    std::unordered_map<uint64_t, std::vector<FactId>> by_arg_;
    std::vector<Conflict> conflicts_;
};

}  // namespace topos
