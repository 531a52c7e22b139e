#include "topos/oracle/metric_line.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace topos::oracle {

std::string LineSet::str() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += "[" + std::to_string(parts[i].lo) + "," + std::to_string(parts[i].hi) + "]";
    }
    return out;
}

int MetricLine::dist(const LineSet& a, const LineSet& b) {
    int best = INT_MAX;
    for (const auto& s : a.parts)
        for (const auto& t : b.parts) best = std::min(best, std::max({0, t.lo - s.hi, s.lo - t.hi}));
    return best;
}

bool MetricLine::P(const LineSet& a, const LineSet& b) {
    // every point of a lies in some segment of b; segments of b may abut
    for (const auto& s : a.parts) {
        int at = s.lo;
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& t : b.parts)
                if (t.lo <= at && t.hi > at) {
                    at = t.hi;
                    progress = true;
                }
        }
        bool covered = false;
        for (const auto& t : b.parts) covered |= t.lo <= at && at <= t.hi;
        if (!covered || at < s.hi) return false;
    }
    return true;
}

std::vector<LineSet> line_domain(int len) {
    std::vector<LineSet> out;
    for (int a = 0; a <= len; ++a)
        for (int b = a; b <= len; ++b) out.push_back({{{a, b}}});
    return out;
}

std::string LineCounterexample::str() const {
    std::string out = check + ":";
    for (const auto& a : args) out += " " + a.str();
    return out;
}

const std::vector<std::string>& line_checks() {
    static const std::vector<std::string> ids = {"A11", "A12", "A13", "A14", "A15", "A16", "A17", "A18", "A19",
                                                 "Equidist-trans1", "Equidist-trans2", "Self-closer"};
    return ids;
}

std::optional<LineCounterexample> check_line(const std::string& id, const std::vector<LineSet>& dom) {
    using M = MetricLine;
    auto three = [&](auto ok) -> std::optional<LineCounterexample> {
        for (const auto& x : dom)
            for (const auto& y : dom)
                for (const auto& z : dom)
                    if (!ok(x, y, z)) return LineCounterexample{id, {x, y, z}};
        return std::nullopt;
    };
    auto four = [&](auto ok) -> std::optional<LineCounterexample> {
        for (const auto& x : dom)
            for (const auto& y : dom)
                for (const auto& z : dom)
                    for (const auto& t : dom)
                        if (!ok(x, y, z, t)) return LineCounterexample{id, {x, y, z, t}};
        return std::nullopt;
    };
    auto eq = [](const LineSet& x, const LineSet& y, const LineSet& z) { return !M::Closer(x, y, z) && !M::Closer(x, z, y); };
    if (id == "A11") return three([](auto& x, auto& y, auto& z) { return !M::Closer(x, y, z) || !M::Closer(x, z, y); });
    if (id == "A12")
        return four([](auto& x, auto& y, auto& z, auto& t) {
            return !M::Closer(x, y, z) || M::Closer(x, y, t) || M::Closer(x, t, z);
        });
    if (id == "A13")
        return three([](auto& x, auto& y, auto& z) {
            return !(M::Closer(x, y, z) && !M::Closer(z, y, x)) || M::Closer(y, x, z);
        });
    if (id == "A14")
        return four([](auto& x, auto& y, auto& z, auto& t) {
            return !(M::Closer(x, y, z) && !M::Closer(x, t, z)) || M::Closer(x, y, t);
        });
    if (id == "A15") return three([](auto& x, auto& y, auto& z) { return !M::C(x, y) || !M::Closer(x, z, y); });
    if (id == "A16")
        return three([](auto& x, auto& y, auto& z) { return !(M::C(x, y) && !M::C(x, z)) || M::Closer(x, y, z); });
    if (id == "A17")
        return three([](auto& x, auto& y, auto& z) { return !(M::WCont(x, y) && !M::C(x, z)) || !M::Closer(x, z, y); });
    if (id == "A18")
        return three([](auto& x, auto& y, auto& z) {
            return !(M::WCont(x, y) && !M::WCont(x, z) && !M::C(x, z)) || M::Closer(x, y, z);
        });
    if (id == "A19") return three([](auto& x, auto& y, auto& z) { return !M::P(x, y) || !M::Closer(z, x, y); });
    if (id == "Equidist-trans1")
        return four([&](auto& x, auto& y, auto& z, auto& t) { return !(eq(x, y, z) && eq(x, z, t)) || eq(x, y, t); });
    if (id == "Equidist-trans2")
        return three([&](auto& x, auto& y, auto& z) { return !(eq(x, y, z) && eq(z, x, y)) || eq(y, x, z); });
    if (id == "Self-closer")
        return three([](auto& x, auto& y, auto&) { return M::C(x, y) || M::Closer(x, x, y); });
    throw std::invalid_argument("unsupported metric-line check '" + id + "'");
}

}  // namespace topos::oracle
