#include "doctest.h"
#include "scene_util.hpp"

using namespace topos;
using tt::Status;

namespace {
const char* kFour = "entity x : Obj;\nentity y : Obj;\nentity z : Obj;\nentity t : Obj;\n";
}

TEST_CASE("A11 strict order") {
    auto s = tt::scene(std::string(kFour) + "assert Closer(x, y, z);\n");
    CHECK(tt::st(s, "Closer(x, z, y)") == Status::Refuted);
    CHECK(tt::st(s, "Equidist(x, y, z)") == Status::Refuted);
    auto bad = tt::scene_file("violations/a11-closer.scene");
    CHECK_FALSE(tt::consistent(bad));
    CHECK(tt::names(bad.kb, "A11"));
}

TEST_CASE("A14 transitivity through a refuted comparison") {
    auto s = tt::scene(std::string(kFour) + "assert Closer(x, y, z);\nassert not Closer(x, t, z);\n");
    CHECK(tt::st(s, "Closer(x, y, t)") == Status::Entailed);
}

TEST_CASE("A15 and A16 contact is nearest") {
    auto s = tt::scene(std::string(kFour) + "assert C(x, y);\nassert not C(x, z);\n");
    CHECK(tt::st(s, "Closer(x, y, z)") == Status::Entailed);
    CHECK(tt::st(s, "Closer(x, z, y)") == Status::Refuted);
    CHECK(tt::st(s, "Closer(x, t, y)") == Status::Refuted);
}

TEST_CASE("A19 parts are not farther than wholes") {
    auto s = tt::scene(std::string(kFour) + "assert P(x, y);\n");
    CHECK(tt::st(s, "Closer(z, x, y)") == Status::Refuted);
}

TEST_CASE("nothing is nearer than oneself") {
    auto s = tt::scene(std::string(kFour) + "assert not C(x, y);\n");
    CHECK(tt::st(s, "Closer(x, x, y)") == Status::Entailed);
}

TEST_CASE("equidistance transitivities") {
    auto s = tt::scene(std::string(kFour) + "assert Equidist(x, y, z);\nassert Equidist(x, z, t);\n");
    CHECK(tt::st(s, "Equidist(x, y, t)") == Status::Entailed);
    auto u = tt::scene(std::string(kFour) + "assert Equidist(x, y, z);\nassert Equidist(z, x, y);\n");
    CHECK(tt::st(u, "Equidist(y, x, z)") == Status::Entailed);
}

TEST_CASE("equidistance is symmetric in its last two places") {
    auto s = tt::scene(std::string(kFour) + "assert Equidist(x, y, z);\n");
    CHECK(tt::st(s, "Equidist(x, z, y)") == Status::Entailed);
    CHECK(tt::st(s, "Closer(x, y, z)") == Status::Refuted);
}

TEST_CASE("weak contact ranks after connection") {
    auto s = tt::scene(std::string(kFour) + "assert WCont(x, y);\nassert not WCont(x, z);\nassert not C(x, z);\n");
    CHECK(tt::st(s, "Closer(x, y, z)") == Status::Entailed);
    CHECK(tt::consistent(s));
}
