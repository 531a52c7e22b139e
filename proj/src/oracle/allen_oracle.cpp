#include "topos/oracle/allen_oracle.hpp"

namespace topos::oracle {

std::vector<Interval> intervals_upto(int max_endpoint) {
    std::vector<Interval> out;
    for (int a = 0; a <= max_endpoint; ++a)
        for (int b = a + 1; b <= max_endpoint; ++b) out.push_back({a, b});
    return out;
}

AllenRel interval_relation(Interval a, Interval b) {
    using R = AllenRel;
    if (a.hi < b.lo) return R::Before;
    if (a.hi == b.lo) return R::Meets;
    if (b.hi < a.lo) return R::After;
    if (b.hi == a.lo) return R::MetBy;
    if (a == b) return R::Equal;
    if (a.lo == b.lo) return a.hi < b.hi ? R::Starts : R::StartedBy;
    if (a.hi == b.hi) return a.lo > b.lo ? R::Finishes : R::FinishedBy;
    if (a.lo > b.lo && a.hi < b.hi) return R::During;
    if (a.lo < b.lo && a.hi > b.hi) return R::Contains;
    return a.lo < b.lo ? R::Overlaps : R::OverlappedBy;
}

AllenTable brute_force_table(int max_endpoint) {
    AllenTable t{};
    auto iv = intervals_upto(max_endpoint);
    for (const auto& x : iv)
        for (const auto& y : iv) {
            auto r1 = size_t(interval_relation(x, y));
            for (const auto& z : iv) t[r1][size_t(interval_relation(y, z))] |= uint16_t(1u << unsigned(interval_relation(x, z)));
        }
    return t;
}

std::vector<TableMismatch> compare_tables(const AllenTable& oracle, const AllenTable& engine) {
    std::vector<TableMismatch> out;
    for (int i = 0; i < kAllenCount; ++i)
        for (int j = 0; j < kAllenCount; ++j)
            if (oracle[size_t(i)][size_t(j)] != engine[size_t(i)][size_t(j)])
                out.push_back({AllenRel(i), AllenRel(j), AllenSet(engine[size_t(i)][size_t(j)]),
                               AllenSet(oracle[size_t(i)][size_t(j)])});
    return out;
}

std::optional<IntervalCounterexample> check_part_allen(int max_endpoint) {
    auto iv = intervals_upto(max_endpoint);
    for (const auto& x : iv)
        for (const auto& y : iv) {
            if (!interval_part(x, y)) continue;
            AllenRel r = interval_relation(x, y);
            if (!kPartAllen.has(r)) return IntervalCounterexample{x, y, r};
        }
    return std::nullopt;
}

std::optional<IntervalCounterexample> check_a29(int max_endpoint) {
    auto iv = intervals_upto(max_endpoint);
    for (const auto& x : iv)
        for (const auto& y : iv) {
            if (!intervals_connected(x, y)) continue;
            AllenRel r = interval_relation(x, y);
            if (!kConnectedAllen.has(r)) return IntervalCounterexample{x, y, r};
        }
    return std::nullopt;
}

}  // namespace topos::oracle
