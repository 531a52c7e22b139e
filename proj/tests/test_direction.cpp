#include "doctest.h"
#include "scene_util.hpp"

using namespace topos;
using tt::Status;

namespace {
const char* kDirs = "direction d1, d2, d3, d4;\n";
}

TEST_CASE("gravity directions are opposite") {
    auto s = tt::scene("entity a : Obj;\n");
    CHECK(tt::st(s, "DirEq(opp(haut-grav), bas-grav)") == Status::Entailed);
    CHECK(tt::st(s, "DirEq(haut-grav, bas-grav)") == Status::Refuted);
    CHECK(s.kb.opposite(s.kb.opposite(s.kb.haut())) == s.kb.haut());
}

TEST_CASE("A20 irreflexivity") {
    auto s = tt::scene(std::string(kDirs) + "dirfact Kd(d1, d2, d3);\n");
    CHECK(tt::st(s, "DirEq(d2, d3)") == Status::Refuted);
    CHECK(tt::st(s, "Kd(d1, d3, d2)") == Status::Refuted);
    auto bad = tt::scene_file("violations/a20-kd.scene");
    CHECK_FALSE(tt::consistent(bad));
    CHECK(tt::names(bad.kb, "A20"));
}

TEST_CASE("A21 transitivity") {
    auto s = tt::scene(std::string(kDirs) + "dirfact Kd(d1, d2, d3);\ndirfact Kd(d1, d3, d4);\n");
    CHECK(tt::st(s, "Kd(d1, d2, d4)") == Status::Entailed);
}

TEST_CASE("A22 second transitivity") {
    auto s = tt::scene(std::string(kDirs) + "dirfact Kd(d1, d2, d3);\ndirfact Kd(d3, d1, d2);\n");
    CHECK(tt::st(s, "Kd(d2, d1, d3)") == Status::Entailed);
}

TEST_CASE("A25 and A26 reflection") {
    auto s = tt::scene(std::string(kDirs) + "dirfact Kd(d1, d2, d3);\n");
    CHECK(tt::st(s, "Kd(d1, opp(d3), opp(d2))") == Status::Entailed);
    CHECK(tt::st(s, "Kd(opp(d1), opp(d2), opp(d3))") == Status::Entailed);
}

TEST_CASE("the opposite is the farthest direction") {
    auto s = tt::scene(std::string(kDirs) + "dirfact not DirEq(d2, opp(d1));\n");
    CHECK(tt::st(s, "Kd(d1, d2, opp(d1))") == Status::Entailed);
}

TEST_CASE("direction identity merges") {
    auto s = tt::scene(std::string(kDirs) + "dirfact DirEq(d1, d2);\ndirfact Kd(d3, d1, d4);\n");
    CHECK(tt::st(s, "Kd(d3, d2, d4)") == Status::Entailed);
    CHECK(tt::st(s, "DirEq(opp(d1), opp(d2))") == Status::Entailed);
}

TEST_CASE("medians are symmetric") {
    auto s = tt::scene(std::string(kDirs) + "dirfact In-med(d3, d1, d2);\n");
    CHECK(tt::st(s, "In-med(d3, d2, d1)") == Status::Entailed);
    CHECK(tt::st(s, "Kd(d3, d1, d2)") == Status::Unknown);
    auto t = tt::scene(std::string(kDirs) + "dirfact In-med(d3, d1, d2);\ndirfact not DirEq(d1, d2);\n");
    CHECK(tt::st(t, "Kd(d3, d1, d2)") == Status::Refuted);
}
