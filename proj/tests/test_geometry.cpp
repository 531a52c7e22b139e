#include "doctest.h"
#include "scene_util.hpp"
#include "topos/geometry.hpp"

using namespace topos;
using tt::Status;

namespace {
const char* kThree = "entity x : Obj;\nentity y : Obj;\nentity z : Obj;\n";
}

TEST_CASE("C is reflexive and symmetric") {
    auto s = tt::scene(std::string(kThree) + "assert C(x, y);\n");
    CHECK(tt::st(s, "C(x, x)") == Status::Entailed);
    CHECK(tt::st(s, "C(y, x)") == Status::Entailed);
    auto n = tt::scene(std::string(kThree) + "assert not C(x, y);\n");
    CHECK(tt::st(n, "C(y, x)") == Status::Refuted);
}

TEST_CASE("parthood orders") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, y);\nassert P(y, z);\n");
    CHECK(tt::st(s, "P(x, z)") == Status::Entailed);
    CHECK(tt::st(s, "P(x, x)") == Status::Entailed);
    CHECK(tt::st(s, "O(x, z)") == Status::Entailed);
    CHECK(tt::st(s, "C(x, z)") == Status::Entailed);

    auto pp = tt::scene(std::string(kThree) + "assert PP(x, y);\nassert PP(y, z);\n");
    CHECK(tt::st(pp, "PP(x, z)") == Status::Entailed);
    CHECK(tt::st(pp, "P(z, x)") == Status::Refuted);
}

TEST_CASE("antisymmetry identifies individuals") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, y);\nassert P(y, x);\nassert C(x, z);\n");
    CHECK(tt::st(s, "Eqs(x, y)") == Status::Entailed);
    CHECK(tt::st(s, "C(y, z)") == Status::Entailed);
}

TEST_CASE("contact kinds exclude each other") {
    auto s = tt::scene(std::string(kThree) + "assert EC(x, y);\n");
    CHECK(tt::st(s, "O(x, y)") == Status::Refuted);
    CHECK(tt::st(s, "C(x, y)") == Status::Entailed);
    CHECK(tt::st(s, "Cont(x, y)") == Status::Entailed);
    CHECK(tt::st(s, "WCont(x, y)") == Status::Refuted);
    CHECK(classify_contact(s.kb, s.kb.sref(*s.kb.find_entity("x")), s.kb.sref(*s.kb.find_entity("y"))) ==
          ContactKind::EC);

    auto w = tt::scene(std::string(kThree) + "assert WCont(x, y);\n");
    CHECK(tt::st(w, "C(x, y)") == Status::Refuted);
    CHECK(tt::st(w, "Cont(x, y)") == Status::Entailed);
    CHECK(tt::st(w, "EC(x, y)") == Status::Refuted);
}

TEST_CASE("non-tangential parts push external contacts into overlap") {
    auto s = tt::scene(std::string(kThree) + "assert NTP(x, y);\nassert EC(z, x);\n");
    CHECK(tt::st(s, "O(z, y)") == Status::Entailed);
    CHECK(tt::st(s, "TP(x, y)") == Status::Refuted);
    CHECK(tt::consistent(s));
}

TEST_CASE("interior contact separates") {
    auto s = tt::scene(std::string(kThree) + "assert ICont(x, y);\n");
    CHECK(tt::st(s, "C(x, y)") == Status::Refuted);
    CHECK(tt::st(s, "ICont(y, x)") == Status::Entailed);
}

TEST_CASE("sum split") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, sum(y, z));\nassert not O(x, y);\n");
    CHECK(tt::st(s, "P(x, z)") == Status::Entailed);
}

TEST_CASE("interiors and closures") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, y);\n");
    CHECK(tt::st(s, "P(i(x), x)") == Status::Entailed);
    CHECK(tt::st(s, "P(x, c(x))") == Status::Entailed);
    CHECK(tt::st(s, "P(i(x), i(y))") == Status::Entailed);
    CHECK(tt::st(s, "OP(i(x))") == Status::Entailed);
    CHECK(tt::st(s, "CL(c(x))") == Status::Entailed);
}

TEST_CASE("contradictory parthood is reported") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, y);\nassert not C(x, y);\n");
    CHECK_FALSE(tt::consistent(s));
}

TEST_CASE("relation evaluator") {
    auto s = tt::scene(std::string(kThree) + "assert P(x, y);\n");
    auto x = s.kb.sref(*s.kb.find_entity("x")), y = s.kb.sref(*s.kb.find_entity("y"));
    CHECK(eval_relation(s.kb, Rel::O, {x, y}).status == Status::Entailed);
    CHECK(eval_relation(s.kb, Rel::P, {y, y}).status == Status::Entailed);
}
