#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topos/relations.hpp"
#include "topos/terms.hpp"

namespace topos {

class Kb;

enum class MeronymyKind : uint8_t { Member, Subcoll, Portion, SubstWh, Component, Piece };
inline constexpr int kMeronymyKinds = 6;

Rel kind_rel(MeronymyKind k);
std::optional<MeronymyKind> kind_of(Rel r);
std::string_view kind_name(MeronymyKind k);
std::optional<MeronymyKind> parse_kind(std::string_view s);

// kind x kind -> kind | none, read from a small text file:
//   <Kind> ; <Kind> -> <Kind>
// Pairs not listed derive nothing.
class CompositionTable {
public:
    static CompositionTable defaults();
    static CompositionTable parse(const std::string& text);  // throws KbError with line numbers
    static CompositionTable load(const std::string& path);

    std::optional<MeronymyKind> compose(MeronymyKind first, MeronymyKind second) const;
    void set(MeronymyKind first, MeronymyKind second, std::optional<MeronymyKind> result);
    std::string str() const;

private:
    std::array<std::array<int8_t, kMeronymyKinds>, kMeronymyKinds> cells_{};
    bool initialized_ = false;
    void clear();
};

struct PartFact {
    MeronymyKind kind;
    EntityId part;
    EntityId whole;
    bool asserted;
};

// Checks the kind-specific class constraints, then records the fact.
void assert_part(Kb& kb, MeronymyKind kind, EntityId x, EntityId y);
// All part facts currently entailed (saturates first).
std::vector<PartFact> derive_parts(Kb& kb);
std::vector<PartFact> part_transitive_closure(Kb& kb);

}  // namespace topos
