#include "topos/oracle/alexandrov.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace topos::oracle {

AlexandrovSpace::AlexandrovSpace(int n, std::vector<PointSet> le) : n_(n), up_(std::move(le)) {
    if (n < 0 || n > kMaxPoints || up_.size() != size_t(n)) throw std::invalid_argument("bad space size");
    down_.assign(size_t(n), 0);
    for (int p = 0; p < n; ++p) {
        if (!((up_[size_t(p)] >> p) & 1u)) throw std::invalid_argument("preorder is not reflexive");
        if (up_[size_t(p)] & ~full()) throw std::invalid_argument("order pair outside the space");
        for (int q = 0; q < n; ++q)
            if ((up_[size_t(p)] >> q) & 1u) {
                if (up_[size_t(q)] & ~up_[size_t(p)]) throw std::invalid_argument("preorder is not transitive");
                down_[size_t(q)] |= PointSet(1) << p;
            }
    }
}

PointSet AlexandrovSpace::closure(PointSet s) const {
    PointSet r = 0;
    for (int p = 0; p < n_; ++p)
        if ((s >> p) & 1u) r |= up_[size_t(p)];
    return r;
}

PointSet AlexandrovSpace::interior(PointSet s) const {
    PointSet r = 0;
    for (int p = 0; p < n_; ++p)
        if ((down_[size_t(p)] & ~s) == 0) r |= PointSet(1) << p;
    return r;
}

bool AlexandrovSpace::connected(PointSet s) const {
    if (s == 0) return false;
    // flood fill along comparability inside s
    PointSet seen = s & (~s + 1);
    PointSet frontier = seen;
    while (frontier) {
        PointSet next = 0;
        for (int p = 0; p < n_; ++p)
            if ((frontier >> p) & 1u) next |= (up_[size_t(p)] | down_[size_t(p)]) & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

std::vector<std::pair<int, int>> AlexandrovSpace::order_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
            if (p != q && le(p, q)) out.emplace_back(p, q);
    return out;
}

std::string AlexandrovSpace::str() const {
    std::string out = "points " + std::to_string(n_) + ";";
    for (auto [p, q] : order_pairs()) out += " " + std::to_string(p) + "<=" + std::to_string(q);
    return out;
}

std::string_view domain_name(DomainKind k) {
    switch (k) {
    case DomainKind::All: return "all";
    case DomainKind::FlagRegular: return "flag-regular";
    case DomainKind::Regular: return "regular";
    }
    return "?";
}

std::optional<DomainKind> parse_domain(std::string_view s) {
    for (auto k : {DomainKind::All, DomainKind::FlagRegular, DomainKind::Regular})
        if (domain_name(k) == s) return k;
    return std::nullopt;
}

std::vector<Region> region_domain(const AlexandrovSpace& sp, DomainKind kind) {
    std::vector<Region> out;
    if (sp.size() > 20) throw std::invalid_argument("region enumeration limited to 20 points");
    for (PointSet s = 1; s <= sp.full() && s != 0; ++s) {
        PointSet ci = sp.closure(sp.interior(s));
        bool flag = (s & ~ci) == 0;
        bool keep = kind == DomainKind::All ||
                    (kind == DomainKind::FlagRegular && flag) ||
                    (kind == DomainKind::Regular && ci == sp.closure(s) && sp.interior(sp.closure(s)) == sp.interior(s));
        if (keep) out.push_back({s, flag});
    }
    return out;
}

std::vector<AlexandrovSpace> enumerate_spaces(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("space enumeration supports 1..5 points");
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) pairs.emplace_back(p, q);
    std::vector<int> perm(static_cast<size_t>(n));
    std::map<uint32_t, std::vector<PointSet>> canon;
    for (uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
        std::vector<PointSet> up(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p) up[size_t(p)] = PointSet(1) << p;
        for (size_t k = 0; k < pairs.size(); ++k)
            if ((bits >> k) & 1u) up[size_t(pairs[k].first)] |= PointSet(1) << pairs[k].second;
        bool trans = true;
        for (int p = 0; p < n && trans; ++p)
            for (int q = 0; q < n && trans; ++q)
                if (((up[size_t(p)] >> q) & 1u) && (up[size_t(q)] & ~up[size_t(p)])) trans = false;
        if (!trans) continue;
        std::iota(perm.begin(), perm.end(), 0);
        uint32_t best = UINT32_MAX;
        do {
            uint32_t key = 0;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if ((up[size_t(perm[size_t(p)])] >> perm[size_t(q)]) & 1u) key |= 1u << (p * n + q);
            best = std::min(best, key);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (canon.count(best)) continue;
        std::vector<PointSet> cu(static_cast<size_t>(n), 0);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if ((best >> (p * n + q)) & 1u) cu[size_t(p)] |= PointSet(1) << q;
        canon.emplace(best, std::move(cu));
    }
    std::vector<AlexandrovSpace> out;
    for (auto& [key, up] : canon) out.emplace_back(n, up);
    return out;
}

RegionModel::RegionModel(const AlexandrovSpace& sp, std::vector<Region> domain)
    : sp_(sp), dom_(std::move(domain)), n_(dom_.size()) {
    p_.assign(n_ * n_, false);
    o_.assign(n_ * n_, false);
    tang_.assign(n_ * n_, false);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            bool p = true;
            for (size_t z = 0; z < n_ && p; ++z)
                if (C(z, i) && !C(z, j)) p = false;
            p_[i * n_ + j] = p;
        }
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t z = 0; z < n_; ++z)
                if (P(z, i) && P(z, j)) {
                    o_[i * n_ + j] = true;
                    break;
                }
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t z = 0; z < n_; ++z)
                if (EC(z, i) && EC(z, j)) {
                    tang_[i * n_ + j] = true;
                    break;
                }
}

bool RegionModel::eqs(PointSet a, PointSet b) const {
    if (a == 0 || b == 0) return false;
    for (const auto& z : dom_)
        if (C(z.points, a) != C(z.points, b)) return false;
    return true;
}

bool RegionModel::Con(size_t i) const {
    for (size_t y = 0; y < n_; ++y)
        for (size_t z = 0; z < n_; ++z)
            if (Sp(y, z) && eqs(at(i), at(y) | at(z))) return false;
    return true;
}

std::string set_str(PointSet s, int n) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < n; ++p)
        if ((s >> p) & 1u) {
            if (!first) out += ",";
            out += std::to_string(p);
            first = false;
        }
    return out + "}";
}

namespace {

using Pred1 = std::function<bool(size_t)>;
using Pred2 = std::function<bool(size_t, size_t)>;
using Pred3 = std::function<bool(size_t, size_t, size_t)>;

std::optional<Counterexample> sweep1(const std::string& id, const RegionModel& m, const Pred1& ok) {
    for (size_t i = 0; i < m.size(); ++i)
        if (!ok(i)) return Counterexample{id, {m.at(i)}, {}};
    return std::nullopt;
}

std::optional<Counterexample> sweep2(const std::string& id, const RegionModel& m, const Pred2& ok) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (!ok(i, j)) return Counterexample{id, {m.at(i), m.at(j)}, {}};
    return std::nullopt;
}

std::optional<Counterexample> sweep3(const std::string& id, const RegionModel& m, const Pred3& ok) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            for (size_t k = 0; k < m.size(); ++k)
                if (!ok(i, j, k)) return Counterexample{id, {m.at(i), m.at(j), m.at(k)}, {}};
    return std::nullopt;
}

bool implies(bool a, bool b) { return !a || b; }

}  // namespace

const std::vector<std::string>& region_checks() {
    static const std::vector<std::string> ids = {
        "A1", "A2", "A3", "O-sym", "EC-sym", "P-trans", "PP-trans", "NTP-trans", "NTP-EC-O",
        "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12"};
    return ids;
}

std::optional<Counterexample> check_region(const std::string& id, const RegionModel& m) {
    const auto& sp = m.space();
    auto res = [&]() -> std::optional<Counterexample> {
        if (id == "A1") return sweep1(id, m, [&](size_t i) { return m.C(i, i); });
        if (id == "A2") return sweep2(id, m, [&](size_t i, size_t j) { return implies(m.C(i, j), m.C(j, i)); });
        if (id == "A3")
            return sweep2(id, m, [&](size_t i, size_t j) {
                if (i == j) return true;
                for (size_t z = 0; z < m.size(); ++z)
                    if (m.C(z, i) != m.C(z, j)) return true;
                return m.at(i) == m.at(j);
            });
        if (id == "O-sym") return sweep2(id, m, [&](size_t i, size_t j) { return m.O(i, j) == m.O(j, i); });
        if (id == "EC-sym") return sweep2(id, m, [&](size_t i, size_t j) { return m.EC(i, j) == m.EC(j, i); });
        if (id == "P-trans")
            return sweep3(id, m, [&](size_t i, size_t j, size_t k) { return implies(m.P(i, j) && m.P(j, k), m.P(i, k)); });
        if (id == "PP-trans")
            return sweep3(id, m,
                          [&](size_t i, size_t j, size_t k) { return implies(m.PP(i, j) && m.PP(j, k), m.PP(i, k)); });
        if (id == "NTP-trans")
            return sweep3(id, m,
                          [&](size_t i, size_t j, size_t k) { return implies(m.NTP(i, j) && m.NTP(j, k), m.NTP(i, k)); });
        if (id == "NTP-EC-O")
            return sweep3(id, m,
                          [&](size_t x, size_t y, size_t z) { return implies(m.NTP(x, y) && m.EC(x, z), m.O(y, z)); });
        if (id == "D1")
            return sweep2(id, m, [&](size_t i, size_t j) { return m.P(i, j) == ((m.at(i) & ~m.at(j)) == 0); });
        if (id == "D2")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return m.PP(i, j) == ((m.at(i) & ~m.at(j)) == 0 && m.at(i) != m.at(j));
            });
        if (id == "D3")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return m.O(i, j) == ((sp.interior(m.at(i)) & sp.interior(m.at(j))) != 0);
            });
        if (id == "D4")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return m.EC(i, j) == (m.C(i, j) && (sp.interior(m.at(i)) & sp.interior(m.at(j))) == 0);
            });
        if (id == "D5" || id == "D6")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return !(m.TP(i, j) && m.NTP(i, j)) && m.P(i, j) == (m.TP(i, j) || m.NTP(i, j));
            });
        if (id == "D7")
            return sweep1(id, m, [&](size_t i) {
                return sp.closure(m.at(i)) == sp.complement(sp.interior(sp.complement(m.at(i))));
            });
        if (id == "D8") return sweep1(id, m, [&](size_t i) { return m.OP(i) == sp.is_open(m.at(i)); });
        if (id == "D9") return sweep1(id, m, [&](size_t i) { return m.CL(i) == sp.is_closed(m.at(i)); });
        if (id == "D10")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return implies(m.Sp(i, j), !m.C(i, j)) && m.Sp(i, j) == m.Sp(j, i);
            });
        // a topologically connected region has no separated decomposition
        if (id == "D11") return sweep1(id, m, [&](size_t i) { return implies(sp.connected(m.at(i)), m.Con(i)); });
        if (id == "D12")
            return sweep2(id, m, [&](size_t i, size_t j) {
                return implies(m.ICont(i, j), !m.C(i, j) && !m.EC(i, j)) && m.ICont(i, j) == m.ICont(j, i);
            });
        throw std::invalid_argument("unsupported region check '" + id + "'");
    }();
    if (res) {
        res->detail = sp.str() + " :";
        for (PointSet s : res->regions) res->detail += " " + set_str(s, sp.size());
    }
    return res;
}

}  // namespace topos::oracle
