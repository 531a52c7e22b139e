#pragma once

#include <optional>
#include <string>
#include <vector>

namespace topos::oracle {

// Closed segment [lo, hi] on an integer line; lo == hi is a point.
struct Segment {
    int lo = 0, hi = 0;
    bool operator==(const Segment&) const = default;
};

// Individual of the metric line: a finite union of closed segments.
struct LineSet {
    std::vector<Segment> parts;
    std::string str() const;
};

// Exact integer distances. WCont is read at unit granularity: the sets are
// disjoint and no lattice point fits between them.
class MetricLine {
public:
    static int dist(const LineSet& a, const LineSet& b);
    static bool C(const LineSet& a, const LineSet& b) { return dist(a, b) == 0; }
    static bool P(const LineSet& a, const LineSet& b);
    static bool WCont(const LineSet& a, const LineSet& b) { return dist(a, b) == 1; }
    static bool Closer(const LineSet& x, const LineSet& y, const LineSet& z) { return dist(x, y) < dist(x, z); }
    static bool Equidist(const LineSet& x, const LineSet& y, const LineSet& z) { return dist(x, y) == dist(x, z); }
};

// Every single segment (points included) with endpoints in [0, len].
std::vector<LineSet> line_domain(int len);

struct LineCounterexample {
    std::string check;
    std::vector<LineSet> args;
    std::string str() const;
};

// Check ids: A11 .. A19, Equidist-trans1, Equidist-trans2, Self-closer.
const std::vector<std::string>& line_checks();
std::optional<LineCounterexample> check_line(const std::string& id, const std::vector<LineSet>& domain);

}  // namespace topos::oracle
