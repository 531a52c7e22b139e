#include "topos/oracle/angles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace topos::oracle {

AngleModel::AngleModel(int step) : step_(step) {
    if (step <= 0 || 360 % step != 0) throw std::invalid_argument("angle step must divide 360");
    for (int a = 0; a < 360; a += step) dirs_.push_back(a);
}

int AngleModel::angdist(int a, int b) {
    int d = std::abs(norm(a) - norm(b));
    return d > 180 ? 360 - d : d;
}

std::set<int> AngleModel::ortho(int d) const {
    // D29 with the opposite in the free slot
    std::set<int> out;
    int o = opp(d);
    for (int d2 : dirs_)
        if (!Kd(d2, d, o) && !Kd(d2, o, d)) out.insert(d2);
    return out;
}

std::set<int> AngleModel::med(int d1, int d2) const {
    if (norm(d1) == norm(d2)) return {norm(d1)};
    std::set<int> out;
    for (int d3 : dirs_)
        if (!Kd(d3, d1, d2) && !Kd(d3, d2, d1)) out.insert(d3);
    return out;
}

std::set<int> AngleModel::sum(int d1, int d2) const {
    auto m = med(d1, d2);
    std::set<int> out;
    for (int d3 : m) {
        bool ok = true;
        for (int d4 : m) ok &= !Kd(d1, d4, d3);
        if (ok) out.insert(d3);
    }
    return out;
}

std::optional<int> AngleModel::opposite_by_kd(int d) const {
    for (int d2 : dirs_) {
        bool ok = true;
        for (int d3 : dirs_) ok &= d3 == d2 || Kd(d, d3, d2);
        if (ok) return d2;
    }
    return std::nullopt;
}

std::set<int> AngleModel::med_analytic(int d1, int d2) {
    d1 = norm(d1);
    d2 = norm(d2);
    if (d1 == d2) return {d1};
    if (angdist(d1, d2) == 180) return {norm(d1 + 90), norm(d1 + 270)};
    // bisector of the smaller arc and its opposite
    int delta = norm(d2 - d1);
    if (delta % 2) return {};  // no whole-degree bisector
    int mid = delta < 180 ? norm(d1 + delta / 2) : norm(d2 + (360 - delta) / 2);
    return {mid, opp(mid)};
}

std::set<int> AngleModel::sum_analytic(int d1, int d2) {
    auto m = med_analytic(d1, d2);
    if (m.size() == 2 && angdist(d1, d2) != 180) {
        int a = *m.begin(), b = *m.rbegin();
        return {angdist(d1, a) < angdist(d1, b) ? a : b};
    }
    return m;
}

std::string AngleCounterexample::str() const {
    std::string out = check + ":";
    for (int a : args) out += " " + std::to_string(a);
    return out;
}

const std::vector<std::string>& angle_checks() {
    static const std::vector<std::string> ids = {"A20", "A21", "A22", "A23", "A24", "A25", "A26", "A27", "A28",
                                                 "Opp", "Ortho", "Med", "Sum"};
    return ids;
}

std::optional<AngleCounterexample> check_angles(const std::string& id, const AngleModel& m) {
    const auto& D = m.directions();
    using M = AngleModel;
    auto fail = [&](std::vector<int> a) { return std::optional<AngleCounterexample>(AngleCounterexample{id, std::move(a)}); };
    auto in = [](const std::set<int>& s, int d) { return s.count(M::norm(d)) > 0; };
    if (id == "A20") {
        for (int a : D)
            for (int b : D)
                if (M::Kd(a, b, b)) return fail({a, b});
    } else if (id == "A21") {
        for (int a : D)
            for (int b : D)
                for (int c : D)
                    for (int d : D)
                        if (M::Kd(a, b, c) && M::Kd(a, c, d) && !M::Kd(a, b, d)) return fail({a, b, c, d});
    } else if (id == "A22") {
        for (int a : D)
            for (int b : D)
                for (int c : D)
                    if (M::Kd(a, b, c) && M::Kd(c, a, b) && !M::Kd(b, a, c)) return fail({a, b, c});
    } else if (id == "A23") {
        for (int a : D)
            if (!m.opposite_by_kd(a)) return fail({a});
    } else if (id == "A24") {
        for (int a : D)
            for (int b : D)
                for (int c : D)
                    if (a != b && a != c && b != c && !M::Kd(a, b, c) && !M::Kd(a, c, b) && !in(m.med(b, c), a))
                        return fail({a, b, c});
    } else if (id == "A25" || id == "A26") {
        for (int a : D)
            for (int b : D)
                for (int c : D) {
                    bool rhs = id == "A25" ? M::Kd(a, M::opp(c), M::opp(b)) : M::Kd(M::opp(a), M::opp(b), M::opp(c));
                    if (M::Kd(a, b, c) != rhs) return fail({a, b, c});
                }
    } else if (id == "A27") {
        for (int d : D)
            for (int d1 : D)
                for (int d2 : D) {
                    if (!in(m.med(d1, d2), d)) continue;
                    for (int d3 : D)
                        if (d1 != d3 && in(m.med(d2, d3), d) && !in(m.med(d1, d3), d)) return fail({d, d1, d2, d3});
                }
    } else if (id == "A28") {
        for (int d : D)
            for (int d2 : D)
                for (int d3 : D) {
                    if (!M::Kd(d, d2, d3)) continue;
                    for (int d1 : m.sum(d2, d3))
                        if (!M::Kd(d3, d1, d) || !M::Kd(M::opp(d2), M::opp(d1), d)) return fail({d, d1, d2, d3});
                }
    } else if (id == "Opp") {
        for (int a : D)
            if (m.opposite_by_kd(a) != M::opp(a)) return fail({a});
    } else if (id == "Ortho") {
        for (int a : D)
            if (m.ortho(a) != M::ortho_analytic(a)) return fail({a});
    } else if (id == "Med" || id == "Sum") {
        for (int a : D)
            for (int b : D) {
                auto want = id == "Med" ? M::med_analytic(a, b) : M::sum_analytic(a, b);
                std::erase_if(want, [&](int d) { return d % m.step() != 0; });
                bool ok = (id == "Med" ? m.med(a, b) : m.sum(a, b)) == want;
                if (!ok) return fail({a, b});
            }
    } else {
        throw std::invalid_argument("unsupported angle check '" + id + "'");
    }
    return std::nullopt;
}

}  // namespace topos::oracle
