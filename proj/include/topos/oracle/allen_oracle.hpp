#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topos/allen.hpp"

namespace topos::oracle {

// Closed integer interval, lo < hi.
struct Interval {
    int lo = 0, hi = 1;
    bool operator==(const Interval&) const = default;
};

std::vector<Interval> intervals_upto(int max_endpoint);
AllenRel interval_relation(Interval a, Interval b);
inline bool intervals_connected(Interval a, Interval b) { return a.lo <= b.hi && b.lo <= a.hi; }
inline bool interval_part(Interval a, Interval b) { return b.lo <= a.lo && a.hi <= b.hi; }

using AllenTable = std::array<std::array<uint16_t, kAllenCount>, kAllenCount>;

// Composition by brute force over all interval triples with endpoints in [0, max].
AllenTable brute_force_table(int max_endpoint = 8);

struct TableMismatch {
    AllenRel r1, r2;
    AllenSet engine, oracle;
};
std::vector<TableMismatch> compare_tables(const AllenTable& oracle, const AllenTable& engine);

struct IntervalCounterexample {
    Interval x, y;
    AllenRel rel;
};
// P(x,y) -> {s, f, d, =}
std::optional<IntervalCounterexample> check_part_allen(int max_endpoint = 8);
// C(x,y) -> neither < nor >
std::optional<IntervalCounterexample> check_a29(int max_endpoint = 8);

}  // namespace topos::oracle
