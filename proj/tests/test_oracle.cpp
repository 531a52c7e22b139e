#include <random>

#include "doctest.h"
#include "topos/allen.hpp"
#include "topos/oracle/alexandrov.hpp"
#include "topos/oracle/allen_oracle.hpp"
#include "topos/oracle/angles.hpp"
#include "topos/oracle/cell_box.hpp"
#include "topos/oracle/metric_line.hpp"
#include "topos/oracle/model_io.hpp"

using namespace topos;
using namespace topos::oracle;

TEST_CASE("finite topologies up to isomorphism") {
    // non-homeomorphic topologies on 1..5 points
    const size_t expected[] = {1, 3, 9, 33, 139};
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_spaces(n).size() == expected[n - 1]);
}

TEST_CASE("closure and interior are dual") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& sp : enumerate_spaces(n))
            for (PointSet s = 0; s <= sp.full(); ++s) {
                CHECK(sp.interior(s) == sp.complement(sp.closure(sp.complement(s))));
                CHECK((sp.interior(s) & ~s) == 0);
                CHECK((s & ~sp.closure(s)) == 0);
                CHECK(sp.closure(sp.closure(s)) == sp.closure(s));
            }
}

TEST_CASE("Sierpinski space") {
    AlexandrovSpace sp(2, {0b11, 0b10});  // 0 <= 1
    CHECK(sp.is_open(0b01));
    CHECK(sp.is_closed(0b10));
    CHECK(sp.closure(0b01) == 0b11);
    CHECK(sp.interior(0b10) == 0);
    CHECK(sp.connected(0b11));
    CHECK_THROWS(AlexandrovSpace(2, {0b10, 0b10}));
}

TEST_CASE("region checks hold on regular domains") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& sp : enumerate_spaces(n)) {
            RegionModel m(sp, region_domain(sp, DomainKind::Regular));
            for (const auto& id : region_checks()) {
                CAPTURE(id);
                CHECK_FALSE(check_region(id, m).has_value());
            }
        }
}

TEST_CASE("A3 fails without regularity") {
    AlexandrovSpace sp(2, {0b11, 0b10});
    RegionModel m(sp, region_domain(sp, DomainKind::FlagRegular));
    CHECK(check_region("A3", m).has_value());
}

TEST_CASE("model files round-trip") {
    auto models = load_models(std::string(TOPOS_SOURCE_DIR) + "/models/complexes.model");
    REQUIRE_FALSE(models.empty());
    for (const auto& m : models) {
        auto back = parse_models(write_model(m));
        REQUIRE(back.size() == 1);
        CHECK(back[0].name == m.name);
        CHECK(back[0].domain == m.domain);
        CHECK(back[0].space.str() == m.space.str());
    }
    CHECK_THROWS_AS(parse_models("space x\npoints 2\nle 0 5\nend\n"), ModelError);
}

TEST_CASE("cell box has regular regions") {
    CHECK(CellBox::regular_regions().size() == 61);
}

TEST_CASE("Allen table against interval brute force") {
    auto brute = brute_force_table(8);
    CHECK(compare_tables(brute, allen_table()).empty());
    CHECK_FALSE(check_part_allen(8).has_value());
    CHECK_FALSE(check_a29(8).has_value());
}

TEST_CASE("interval relations are exhaustive and exclusive") {
    auto iv = intervals_upto(5);
    for (auto a : iv)
        for (auto b : iv) {
            auto r = interval_relation(a, b);
            CHECK(interval_relation(b, a) == converse(r));
            CHECK((r == AllenRel::Equal) == (a == b));
        }
}

TEST_CASE("angle operators") {
    AngleModel m(15);
    CHECK(m.ortho(0) == std::set<int>{90, 270});
    CHECK(m.sum(0, 90) == std::set<int>{45});
    CHECK(m.med(0, 90) == std::set<int>{45, 225});
    CHECK(m.opposite_by_kd(30) == 210);
    CHECK(AngleModel::angdist(350, 10) == 20);
    CHECK(AngleModel::Kd(0, 10, 20));
    for (const auto& id : angle_checks()) {
        CAPTURE(id);
        CHECK_FALSE(check_angles(id, m).has_value());
    }
}

TEST_CASE("metric line") {
    LineSet a{{{0, 2}}}, b{{{3, 5}}}, c{{{1, 1}}}, d{{{6, 6}}};
    CHECK(MetricLine::dist(a, b) == 1);
    CHECK(MetricLine::WCont(a, b));
    CHECK_FALSE(MetricLine::C(a, b));
    CHECK(MetricLine::P(c, a));
    CHECK(MetricLine::Closer(a, b, d));
    auto dom = line_domain(6);
    CHECK(dom.size() == 28);
    for (const auto& id : line_checks()) {
        CAPTURE(id);
        CHECK_FALSE(check_line(id, dom).has_value());
    }
}
