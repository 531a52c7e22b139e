#include "doctest.h"
#include "scene_util.hpp"

using namespace topos;
using tt::Status;

TEST_CASE("declared class excludes the others") {
    auto s = tt::scene("entity maison : Obj;\nentity île : Loc;\n");
    CHECK(tt::st(s, "Obj(maison)") == Status::Entailed);
    CHECK(tt::st(s, "Loc(maison)") == Status::Refuted);
    CHECK(tt::st(s, "Sp-port(île)") == Status::Refuted);
    CHECK(tt::consistent(s));
}

TEST_CASE("A43 second class is a conflict") {
    auto s = tt::scene("entity jardin : Obj;\nassert Loc(jardin);\n");
    CHECK_FALSE(tt::consistent(s));
    CHECK(tt::names(s.kb, "A43"));
}

TEST_CASE("duplicate and bad declarations") {
    CHECK_THROWS(tt::scene("entity a : Obj;\nentity a : Obj;\n"));
    CHECK_THROWS(tt::scene("entity a : Plural;\n"));
    CHECK_THROWS(tt::scene("entity a : Obj attrs {Depend:nobody};\n"));
}

TEST_CASE("space portions need a material anchor") {
    auto s = tt::scene("entity trou : Sp-port;\n");
    CHECK(tt::names(s.kb, "A42"));
    auto ok = tt::scene("entity drap : Obj;\nentity trou : Sp-port attrs {Depend:drap};\n");
    CHECK(tt::consistent(ok));
}

TEST_CASE("Same merges entities") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
entity c : Obj;
assert Same(a, b);
assert P(b, c);
)");
    CHECK(tt::st(s, "P(a, c)") == Status::Entailed);
    CHECK(tt::st(s, "Eqs(a, b)") == Status::Entailed);
    CHECK(s.kb.canon_entity(*s.kb.find_entity("a")) == s.kb.canon_entity(*s.kb.find_entity("b")));
}

TEST_CASE("collections") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
entity troupeau : Obj;
assert Is-coll(troupeau, plural(a, b));
)");
    CHECK(tt::st(s, "Coll(troupeau)") == Status::Entailed);
    CHECK(tt::st(s, "At(troupeau)") == Status::Entailed);
    CHECK(tt::st(s, "Eqs(troupeau, plural(a, b))") == Status::Entailed);
    CHECK(tt::consistent(s));
}

TEST_CASE("A37 one collection per plurality") {
    auto s = tt::scene_file("violations/a37-iscoll.scene");
    CHECK_FALSE(tt::consistent(s));
    CHECK(tt::names(s.kb, "A37"));
}

TEST_CASE("quantities") {
    auto s = tt::scene(R"(
entity verre : Mat;
entity eau : Subst;
assert Q(verre, eau);
)");
    CHECK(tt::st(s, "Mat(verre)") == Status::Entailed);
    CHECK(tt::st(s, "Subst(eau)") == Status::Entailed);
    CHECK(tt::st(s, "P(verre, eau)") == Status::Entailed);
    CHECK(tt::consistent(s));
}

TEST_CASE("A39 one substance per quantity") {
    auto s = tt::scene_file("violations/a39-quantity.scene");
    CHECK_FALSE(tt::consistent(s));
    CHECK(tt::names(s.kb, "A39"));
}

TEST_CASE("entity store names") {
    Kb kb;
    auto a = kb.declare_entity("a", EntityClass::Obj);
    CHECK(kb.find_entity("a") == a);
    CHECK_FALSE(kb.find_entity("b").has_value());
    CHECK(kb.ent_str(a) == "a");
    auto ia = kb.interior_of(a);
    CHECK(kb.entity(ia).cls == EntityClass::SpPort);
    CHECK(kb.interior_of(a) == ia);
}
