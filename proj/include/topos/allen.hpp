#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace topos {

// The 13 base relations, in the bit order used by AllenSet.
enum class AllenRel : uint8_t { Before, Meets, Overlaps, Starts, During, Finishes, Equal,
                                After, MetBy, OverlappedBy, StartedBy, Contains, FinishedBy };

inline constexpr int kAllenCount = 13;

// Disjunctive Allen relation as a 13-bit mask.
class AllenSet {
public:
    constexpr AllenSet() = default;
    constexpr explicit AllenSet(uint16_t bits) : bits_(bits & kAll) {}
    constexpr AllenSet(AllenRel r) : bits_(uint16_t(1u << unsigned(r))) {}

    static constexpr AllenSet all() { return AllenSet(kAll); }
    static constexpr AllenSet none() { return AllenSet(0); }

    constexpr uint16_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_all() const { return bits_ == kAll; }
    constexpr bool has(AllenRel r) const { return bits_ & (1u << unsigned(r)); }
    constexpr bool subset_of(AllenSet o) const { return (bits_ & ~o.bits_) == 0; }
    int size() const;

    constexpr AllenSet operator&(AllenSet o) const { return AllenSet(uint16_t(bits_ & o.bits_)); }
    constexpr AllenSet operator|(AllenSet o) const { return AllenSet(uint16_t(bits_ | o.bits_)); }
    constexpr AllenSet operator~() const { return AllenSet(uint16_t(~bits_ & kAll)); }
    constexpr bool operator==(const AllenSet&) const = default;

    // "{mi,>}" style, relations in canonical order.
    std::string str() const;
    // Compact form used in rule notes, e.g. "mi>".
    std::string glyph() const;

private:
    static constexpr uint16_t kAll = 0x1fff;
    uint16_t bits_ = 0;
};

std::string_view allen_name(AllenRel r);
std::optional<AllenRel> parse_allen_rel(std::string_view s);

AllenRel converse(AllenRel r);
AllenSet converse(AllenSet s);
// Relation seen along the opposite direction (axis reversal).
AllenRel reverse_axis(AllenRel r);
AllenSet reverse_axis(AllenSet s);

// Composition r1 ; r2 from the embedded 13x13 table.
AllenSet compose(AllenRel r1, AllenRel r2);
AllenSet compose(AllenSet s1, AllenSet s2);

const std::array<std::array<uint16_t, kAllenCount>, kAllenCount>& allen_table();

// A29: connected individuals can be neither before nor after one another.
inline constexpr AllenSet kConnectedAllen = AllenSet(uint16_t(0x1fff & ~((1u << 0) | (1u << 7))));
// Fn4: parthood projects to {s, f, d, =}.
inline constexpr AllenSet kPartAllen = AllenSet(uint16_t((1u << 3) | (1u << 4) | (1u << 5) | (1u << 6)));
// In-sp: {mi, >}.
inline constexpr AllenSet kInSpAllen = AllenSet(uint16_t((1u << 7) | (1u << 8)));
// Same-level test used for Cont2: every relation sharing an inner point.
inline constexpr AllenSet kSameLevelAllen =
    AllenSet(uint16_t((1u << 2) | (1u << 3) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 9) |
                      (1u << 10) | (1u << 11) | (1u << 12)));

}  // namespace topos
