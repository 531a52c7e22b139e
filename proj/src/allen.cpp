#include "topos/allen.hpp"

#include <bit>

namespace topos {

namespace {

constexpr std::array<std::string_view, kAllenCount> kNames = {
    "<", "m", "o", "s", "d", "f", "=", ">", "mi", "oi", "si", "di", "fi"};

constexpr std::array<AllenRel, kAllenCount> kConverse = {
    AllenRel::After,        AllenRel::MetBy,     AllenRel::OverlappedBy, AllenRel::StartedBy,
    AllenRel::Contains,     AllenRel::FinishedBy, AllenRel::Equal,       AllenRel::Before,
    AllenRel::Meets,        AllenRel::Overlaps,  AllenRel::Starts,       AllenRel::During,
    AllenRel::Finishes};

// Flipping the axis maps [a,b] to [-b,-a].
constexpr std::array<AllenRel, kAllenCount> kReverse = {
    AllenRel::After,        AllenRel::MetBy,      AllenRel::OverlappedBy, AllenRel::Finishes,
    AllenRel::During,       AllenRel::Starts,     AllenRel::Equal,        AllenRel::Before,
    AllenRel::Meets,        AllenRel::Overlaps,   AllenRel::FinishedBy,   AllenRel::Contains,
    AllenRel::StartedBy};

// rows: first relation, columns: second relation
constexpr std::array<std::array<uint16_t, kAllenCount>, kAllenCount> kTable = {{
    {0x0001, 0x0001, 0x0001, 0x0001, 0x001f, 0x001f, 0x0001, 0x1fff, 0x001f, 0x001f, 0x0001, 0x0001, 0x0001},
    {0x0001, 0x0001, 0x0001, 0x0002, 0x001c, 0x001c, 0x0002, 0x0f80, 0x1060, 0x001c, 0x0002, 0x0001, 0x0001},
    {0x0001, 0x0001, 0x0007, 0x0004, 0x001c, 0x001c, 0x0004, 0x0f80, 0x0e00, 0x1e7c, 0x1804, 0x1807, 0x0007},
    {0x0001, 0x0001, 0x0007, 0x0008, 0x0010, 0x0010, 0x0008, 0x0080, 0x0100, 0x0230, 0x0448, 0x1807, 0x0007},
    {0x0001, 0x0001, 0x001f, 0x0010, 0x0010, 0x0010, 0x0010, 0x0080, 0x0080, 0x03b0, 0x03b0, 0x1fff, 0x001f},
    {0x0001, 0x0002, 0x001c, 0x0010, 0x0010, 0x0020, 0x0020, 0x0080, 0x0080, 0x0380, 0x0380, 0x0f80, 0x1060},
    {0x0001, 0x0002, 0x0004, 0x0008, 0x0010, 0x0020, 0x0040, 0x0080, 0x0100, 0x0200, 0x0400, 0x0800, 0x1000},
    {0x1fff, 0x03b0, 0x03b0, 0x03b0, 0x03b0, 0x0080, 0x0080, 0x0080, 0x0080, 0x0080, 0x0080, 0x0080, 0x0080},
    {0x1807, 0x0448, 0x0230, 0x0230, 0x0230, 0x0100, 0x0100, 0x0080, 0x0080, 0x0080, 0x0080, 0x0080, 0x0100},
    {0x1807, 0x1804, 0x1e7c, 0x0230, 0x0230, 0x0200, 0x0200, 0x0080, 0x0080, 0x0380, 0x0380, 0x0f80, 0x0e00},
    {0x1807, 0x1804, 0x1804, 0x0448, 0x0230, 0x0200, 0x0400, 0x0080, 0x0100, 0x0200, 0x0400, 0x0800, 0x0800},
    {0x1807, 0x1804, 0x1804, 0x1804, 0x1e7c, 0x0e00, 0x0800, 0x0f80, 0x0e00, 0x0e00, 0x0800, 0x0800, 0x0800},
    {0x0001, 0x0002, 0x0004, 0x0004, 0x001c, 0x1060, 0x1000, 0x0f80, 0x0e00, 0x0e00, 0x0800, 0x0800, 0x1000},
}};

template <typename F>
AllenSet map_set(AllenSet s, F f) {
    uint16_t out = 0;
    for (int i = 0; i < kAllenCount; ++i)
        if (s.bits() & (1u << i)) out |= uint16_t(1u << unsigned(f(AllenRel(i))));
    return AllenSet(out);
}

}  // namespace

int AllenSet::size() const { return std::popcount(bits_); }

std::string AllenSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kAllenCount; ++i) {
        if (!(bits_ & (1u << i))) continue;
        if (!first) out += ",";
        out += kNames[i];
        first = false;
    }
    return out + "}";
}

std::string AllenSet::glyph() const {
    // meets-family first, so {mi,>} prints as mi>
    static constexpr int kOrder[kAllenCount] = {8, 1, 0, 7, 2, 9, 3, 10, 4, 11, 5, 12, 6};
    std::string out;
    for (int i : kOrder)
        if (bits_ & (1u << i)) out += kNames[i];
    return out.empty() ? "0" : out;
}

std::string_view allen_name(AllenRel r) { return kNames[size_t(r)]; }

std::optional<AllenRel> parse_allen_rel(std::string_view s) {
    for (int i = 0; i < kAllenCount; ++i)
        if (kNames[i] == s) return AllenRel(i);
    return std::nullopt;
}

AllenRel converse(AllenRel r) { return kConverse[size_t(r)]; }
AllenSet converse(AllenSet s) { return map_set(s, [](AllenRel r) { return converse(r); }); }
AllenRel reverse_axis(AllenRel r) { return kReverse[size_t(r)]; }
AllenSet reverse_axis(AllenSet s) { return map_set(s, [](AllenRel r) { return reverse_axis(r); }); }

AllenSet compose(AllenRel r1, AllenRel r2) { return AllenSet(kTable[size_t(r1)][size_t(r2)]); }

AllenSet compose(AllenSet s1, AllenSet s2) {
    uint16_t out = 0;
    for (int i = 0; i < kAllenCount; ++i) {
        if (!(s1.bits() & (1u << i))) continue;
        for (int j = 0; j < kAllenCount; ++j)
            if (s2.bits() & (1u << j)) out |= kTable[i][j];
    }
    return AllenSet(out);
}

const std::array<std::array<uint16_t, kAllenCount>, kAllenCount>& allen_table() { return kTable; }

}  // namespace topos
