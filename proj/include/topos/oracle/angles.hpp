#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace topos::oracle {

// Planar directions as whole degrees on a grid of multiples of step.
class AngleModel {
public:
    explicit AngleModel(int step = 15);

    const std::vector<int>& directions() const { return dirs_; }
    int step() const { return step_; }

    static int norm(int a) { return ((a % 360) + 360) % 360; }
    static int angdist(int a, int b);
    static int opp(int a) { return norm(a + 180); }
    static bool Kd(int d1, int d2, int d3) { return angdist(d1, d2) < angdist(d1, d3); }

    // Computed from Kd over the grid.
    std::set<int> ortho(int d) const;
    std::set<int> med(int d1, int d2) const;
    std::set<int> sum(int d1, int d2) const;
    std::optional<int> opposite_by_kd(int d) const;

    // Closed forms.
    static std::set<int> ortho_analytic(int d) { return {norm(d + 90), norm(d + 270)}; }
    static std::set<int> med_analytic(int d1, int d2);
    static std::set<int> sum_analytic(int d1, int d2);

private:
    int step_;
    std::vector<int> dirs_;
};

struct AngleCounterexample {
    std::string check;
    std::vector<int> args;
    std::string str() const;
};

// A20 .. A28, plus Opp, Ortho, Med, Sum (grid operators equal their closed forms).
const std::vector<std::string>& angle_checks();
std::optional<AngleCounterexample> check_angles(const std::string& id, const AngleModel& m);

}  // namespace topos::oracle
