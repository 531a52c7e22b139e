#include "topos/oracle/suite.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "topos/engine.hpp"
#include "topos/oracle/allen_oracle.hpp"
#include "topos/oracle/angles.hpp"
#include "topos/oracle/cell_box.hpp"
#include "topos/oracle/metric_line.hpp"

namespace topos::oracle {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"alexandrov", "cellbox",   "allen",    "distance",
                                                   "direction",  "embedding", "geometry", "all"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& suite, const std::string& id, const std::string& scope,
                  const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.suite = suite;
    r.id = id;
    r.scope = scope;
    auto t0 = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

void alexandrov_suite(const SuiteOptions& o, std::vector<CheckResult>& out) {
    struct Model {
        std::string name;
        RegionModel regular, flag;
    };
    std::vector<Model> models;
    for (int n = 1; n <= o.max_points; ++n) {
        int k = 0;
        for (const auto& sp : enumerate_spaces(n))
            models.push_back({"n" + std::to_string(n) + "#" + std::to_string(k++),
                              RegionModel(sp, region_domain(sp, DomainKind::Regular)),
                              RegionModel(sp, region_domain(sp, DomainKind::FlagRegular))});
    }
    std::string scope = "all spaces up to " + std::to_string(o.max_points) + " points, regular regions";
    for (const auto& id : region_checks())
        out.push_back(timed("alexandrov", id, scope, [&](CheckResult& r) {
            for (const auto& m : models) {
                ++r.cases;
                if (auto cx = check_region(id, m.regular)) {
                    r.pass = false;
                    r.detail = m.name + " " + cx->detail;
                    return;
                }
            }
        }));
    // A3 must be sensitive to regularity: the weaker flag domain admits counterexamples.
    out.push_back(timed("alexandrov", "A3-nonregular", "all spaces up to " + std::to_string(o.max_points) +
                                                          " points, flag-regular regions (counterexamples expected)",
                        [&](CheckResult& r) {
                            size_t found = 0;
                            std::string first;
                            for (const auto& m : models) {
                                ++r.cases;
                                if (auto cx = check_region("A3", m.flag)) {
                                    if (!found) first = m.name + " " + cx->detail;
                                    ++found;
                                }
                            }
                            r.pass = found > 0;
                            r.detail = std::to_string(found) + " of " + std::to_string(models.size()) +
                                       " spaces violate A3" + (found ? "; first: " + first : "");
                        }));
    for (const auto& ns : o.extra_spaces) {
        RegionModel m(ns.space, region_domain(ns.space, ns.domain));
        for (const auto& id : region_checks())
            out.push_back(timed("alexandrov", id, "model " + ns.name + " (" + std::string(domain_name(ns.domain)) + ")",
                                [&](CheckResult& r) {
                                    r.cases = 1;
                                    if (auto cx = check_region(id, m)) {
                                        r.pass = false;
                                        r.detail = cx->detail;
                                    }
                                }));
    }
}

void cellbox_suite(std::vector<CheckResult>& out) {
    auto sp = CellBox::space();
    RegionModel m(sp, CellBox::regular_regions());
    std::string scope = "25-cell 2x2 square complex, " + std::to_string(m.size()) + " regular regions";
    for (const auto& id : region_checks())
        out.push_back(timed("cellbox", id, scope, [&](CheckResult& r) {
            r.cases = m.size();
            if (auto cx = check_region(id, m)) {
                r.pass = false;
                r.detail = cx->detail;
            }
        }));
}

void allen_suite(const SuiteOptions& o, std::vector<CheckResult>& out) {
    std::string scope = "integer intervals, endpoints 0.." + std::to_string(o.interval_max);
    out.push_back(timed("allen", "composition-table", scope, [&](CheckResult& r) {
        auto diff = compare_tables(brute_force_table(o.interval_max), allen_table());
        r.cases = size_t(kAllenCount * kAllenCount);
        r.pass = diff.empty();
        r.detail = std::to_string(r.cases - diff.size()) + "/169 cells equal";
        if (!diff.empty())
            r.detail += "; first mismatch " + std::string(allen_name(diff[0].r1)) + ";" +
                        std::string(allen_name(diff[0].r2)) + " engine " + diff[0].engine.str() + " oracle " +
                        diff[0].oracle.str();
    }));
    auto iv_check = [&](const std::string& id, auto fn) {
        out.push_back(timed("allen", id, scope, [&](CheckResult& r) {
            r.cases = intervals_upto(o.interval_max).size() * intervals_upto(o.interval_max).size();
            if (auto cx = fn(o.interval_max)) {
                r.pass = false;
                r.detail = "[" + std::to_string(cx->x.lo) + "," + std::to_string(cx->x.hi) + "] [" +
                           std::to_string(cx->y.lo) + "," + std::to_string(cx->y.hi) + "] " +
                           std::string(allen_name(cx->rel));
            }
        }));
    };
    iv_check("P-sfd=", check_part_allen);
    iv_check("A29", check_a29);
}

void distance_suite(const SuiteOptions& o, std::vector<CheckResult>& out) {
    auto dom = line_domain(o.line_len);
    std::string scope = "segments on [0," + std::to_string(o.line_len) + "], " + std::to_string(dom.size()) + " sets";
    for (const auto& id : line_checks())
        out.push_back(timed("distance", id, scope, [&](CheckResult& r) {
            r.cases = dom.size();
            if (auto cx = check_line(id, dom)) {
                r.pass = false;
                r.detail = cx->str();
            }
        }));
}

void direction_suite(const SuiteOptions& o, std::vector<CheckResult>& out) {
    AngleModel m(o.angle_step);
    std::string scope = "multiples of " + std::to_string(o.angle_step) + " degrees";
    for (const auto& id : angle_checks())
        out.push_back(timed("direction", id, scope, [&](CheckResult& r) {
            r.cases = m.directions().size();
            if (auto cx = check_angles(id, m)) {
                r.pass = false;
                r.detail = cx->str();
            }
        }));
}

void embedding_suite(const SuiteOptions& o, std::vector<CheckResult>& out) {
    auto add = [&](const std::string& id, const std::string& scope, auto fn) {
        out.push_back(timed("embedding", id, scope, [&](CheckResult& r) {
            EmbedReport rep = fn();
            r.cases = rep.scenes;
            r.pass = rep.violations.empty();
            r.detail = std::to_string(rep.literals) + " engine literals compared, " +
                       std::to_string(rep.violations.size()) + " violations";
            if (!rep.violations.empty()) r.detail += "; first: " + rep.violations[0];
        }));
    };
    add("metric-line-scenes", std::to_string(o.metric_scenes) + " random scenes",
        [&] { return embed_metric_scenes(o.metric_scenes, o.seed); });
    add("angle-scenes", std::to_string(o.angle_scenes) + " random scenes",
        [&] { return embed_angle_scenes(o.angle_scenes, o.seed + 1, o.angle_step); });
}

Literal lit(Rel r, bool pos, std::vector<uint32_t> args) {
    Literal l;
    l.rel = r;
    l.positive = pos;
    l.args = std::move(args);
    return l;
}

}  // namespace

EmbedReport embed_metric_scenes(int count, uint64_t seed) {
    using M = MetricLine;
    EmbedReport rep;
    std::mt19937_64 rng(seed);
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int s = 0; s < count; ++s) {
        Kb kb;
        int k = pick(3, 5);
        std::vector<LineSet> where;
        std::vector<IndId> ind;
        for (int i = 0; i < k; ++i) {
            int a = pick(0, 9), b = a + pick(0, 3);
            where.push_back({{{a, b}}});
            ind.push_back(kb.sref(kb.declare_entity("e" + std::to_string(i), EntityClass::Obj)));
        }
        // nothing is said about the reserve, so no sref is connection-complete
        where.push_back({{{20, 20}}});
        ind.push_back(kb.sref(kb.declare_entity("reserve", EntityClass::Obj)));
        for (IndId x : ind) kb.touch_distance(x);
        auto say = [&](Literal l) {
            kb.assert_literal(l);
            ++rep.asserted;
        };
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if (i < j && coin(0.5)) say(lit(Rel::C, M::C(where[size_t(i)], where[size_t(j)]), {ind[size_t(i)], ind[size_t(j)]}));
                if (coin(0.3)) say(lit(Rel::P, M::P(where[size_t(i)], where[size_t(j)]), {ind[size_t(i)], ind[size_t(j)]}));
                if (i < j && M::WCont(where[size_t(i)], where[size_t(j)]) && coin(0.5))
                    say(lit(Rel::WCont, true, {ind[size_t(i)], ind[size_t(j)]}));
            }
        for (int t = 0; t < 2 * k; ++t) {
            int x = pick(0, k - 1), y = pick(0, k - 1), z = pick(0, k - 1);
            const auto &wx = where[size_t(x)], &wy = where[size_t(y)], &wz = where[size_t(z)];
            if (coin(0.5)) say(lit(Rel::Closer, M::Closer(wx, wy, wz), {ind[size_t(x)], ind[size_t(y)], ind[size_t(z)]}));
            else say(lit(Rel::Equidist, M::Equidist(wx, wy, wz), {ind[size_t(x)], ind[size_t(y)], ind[size_t(z)]}));
        }
        kb.saturate();
        ++rep.scenes;
        for (const auto& c : kb.conflicts())
            rep.violations.push_back("scene " + std::to_string(s) + ": conflict " + c.axiom + " " + c.message);
        size_t n = ind.size();
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z)
                    for (Rel r : {Rel::Closer, Rel::Equidist}) {
                        Status st = kb.status(make_atom(r, ind[x], ind[y], ind[z]));
                        if (st == Status::Unknown) continue;
                        ++rep.literals;
                        bool truth = r == Rel::Closer ? M::Closer(where[x], where[y], where[z])
                                                      : M::Equidist(where[x], where[y], where[z]);
                        if ((st == Status::Entailed) != truth)
                            rep.violations.push_back("scene " + std::to_string(s) + ": engine " +
                                                     std::string(status_name(st)) + " " +
                                                     kb.atom_str(make_atom(r, ind[x], ind[y], ind[z])) + " with " +
                                                     where[x].str() + " " + where[y].str() + " " + where[z].str());
                    }
    }
    return rep;
}

EmbedReport embed_angle_scenes(int count, uint64_t seed, int step) {
    using M = AngleModel;
    EmbedReport rep;
    std::mt19937_64 rng(seed);
    AngleModel model(step);
    int slots = int(model.directions().size());
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int s = 0; s < count; ++s) {
        Kb kb;
        int k = pick(2, 4);
        std::vector<DirId> ids;
        for (int i = 0; i < k; ++i) ids.push_back(kb.declare_direction("d" + std::to_string(i)));
        std::vector<int> base(size_t(kb.dirs().size() / 2), 90);  // haut-grav sits at 90
        for (int i = 0; i < k; ++i) base[ids[size_t(i)] / 2] = model.directions()[size_t(pick(0, slots - 1))];
        auto angle = [&](DirId d) { return M::norm(base[d / 2] + ((d & 1u) ? 180 : 0)); };
        std::vector<DirId> all;
        for (DirId d : ids) {
            all.push_back(d);
            all.push_back(kb.opposite(d));
        }
        auto say = [&](Literal l) {
            kb.assert_literal(l);
            ++rep.asserted;
        };
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                if (coin(0.5)) say(lit(Rel::DirEq, angle(all[i]) == angle(all[j]), {all[i], all[j]}));
        for (int t = 0; t < 3 * k; ++t) {
            DirId a = all[size_t(pick(0, int(all.size()) - 1))], b = all[size_t(pick(0, int(all.size()) - 1))],
                  c = all[size_t(pick(0, int(all.size()) - 1))];
            say(lit(Rel::Kd, M::Kd(angle(a), angle(b), angle(c)), {a, b, c}));
        }
        kb.saturate();
        ++rep.scenes;
        for (const auto& c : kb.conflicts())
            rep.violations.push_back("scene " + std::to_string(s) + ": conflict " + c.axiom + " " + c.message);
        auto check = [&](const Atom& a, bool truth) {
            Status st = kb.status(a);
            if (st == Status::Unknown) return;
            ++rep.literals;
            if ((st == Status::Entailed) != truth)
                rep.violations.push_back("scene " + std::to_string(s) + ": engine " + std::string(status_name(st)) +
                                         " " + kb.atom_str(a));
        };
        for (DirId a : all)
            for (DirId b : all) {
                check(make_atom(Rel::DirEq, a, b), angle(a) == angle(b));
                check(make_atom(Rel::InOrtho, a, b), M::angdist(angle(a), angle(b)) == 90);
                for (DirId c : all) {
                    check(make_atom(Rel::Kd, a, b, c), M::Kd(angle(a), angle(b), angle(c)));
                    check(make_atom(Rel::InMed, a, b, c), model.med(angle(b), angle(c)).count(angle(a)) > 0);
                    check(make_atom(Rel::InSum, a, b, c), model.sum(angle(b), angle(c)).count(angle(a)) > 0);
                }
            }
    }
    return rep;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o) {
    std::vector<CheckResult> out;
    bool geo = name == "geometry" || name == "all";
    bool known = false;
    auto want = [&](const char* s) {
        bool w = geo || name == s;
        known |= w;
        return w;
    };
    if (want("alexandrov")) alexandrov_suite(o, out);
    if (want("cellbox")) cellbox_suite(out);
    if (want("allen")) allen_suite(o, out);
    if (want("distance")) distance_suite(o, out);
    if (want("direction")) direction_suite(o, out);
    if (name == "embedding" || name == "all") {
        known = true;
        embedding_suite(o, out);
    }
    if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

nlohmann::json results_json(const std::vector<CheckResult>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs)
        arr.push_back({{"suite", r.suite},
                       {"id", r.id},
                       {"scope", r.scope},
                       {"pass", r.pass},
                       {"cases", r.cases},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
    return arr;
}

}  // namespace topos::oracle
