#include "doctest.h"
#include "scene_util.hpp"
#include "topos/orientation.hpp"

using namespace topos;
using tt::Status;

namespace {
const char* kBase = R"(
entity max : Obj;
entity dos : Obj;
entity visage : Obj;
direction f, g;
assert Dir-ext(dos, visage, max, f);
)";
}

TEST_CASE("extremities are parts and fix the direction") {
    auto s = tt::scene(kBase);
    CHECK(tt::st(s, "Part(dos, max)") == Status::Entailed);
    CHECK(tt::st(s, "Part(visage, max)") == Status::Entailed);
    auto d = eval_dir_ext(s.kb, *s.kb.find_entity("dos"), *s.kb.find_entity("visage"), *s.kb.find_entity("max"));
    REQUIRE(d.has_value());
    CHECK(s.kb.dirs().canon(*d) == s.kb.dirs().canon(*s.kb.find_direction("f")));
    auto r = eval_dir_ext(s.kb, *s.kb.find_entity("visage"), *s.kb.find_entity("dos"), *s.kb.find_entity("max"));
    REQUIRE(r.has_value());
    CHECK(s.kb.dirs().canon(*r) == s.kb.dirs().canon(s.kb.opposite(*s.kb.find_direction("f"))));
}

TEST_CASE("generic front") {
    auto s = tt::scene(std::string(kBase) + "assert Orient-gen(max, f);\n");
    CHECK(tt::st(s, "Orient-avant1(f, max)") == Status::Entailed);
    CHECK(tt::st(s, "Orient-avant(f, max)") == Status::Entailed);
    auto bare = tt::scene(kBase);
    CHECK(tt::st(bare, "Orient-avant1(f, max)") != Status::Entailed);
}

TEST_CASE("front by use follows the user") {
    auto s = tt::scene(std::string(kBase) + R"(
assert Orient-gen(max, f);
entity bureau : Obj;
entity plateau : Obj;
entity bord : Obj;
assert Dir-ext(plateau, bord, bureau, g);
assert Can-Use(bureau);
assert Utilise(bureau, max);
dirfact DirEq(f, g);
)");
    CHECK(tt::st(s, "Orient-avant2(g, bureau)") == Status::Entailed);
    CHECK(tt::consistent(s));
}

TEST_CASE("front by use needs a user") {
    auto s = tt::scene(std::string(kBase) + R"(
entity bureau : Obj;
entity plateau : Obj;
entity bord : Obj;
assert Dir-ext(plateau, bord, bureau, g);
assert Can-Use(bureau);
)");
    CHECK(tt::st(s, "Orient-avant2(g, bureau)") != Status::Entailed);
}

TEST_CASE("top by use along gravity") {
    auto s = tt::scene(R"(
entity lampe : Obj;
entity pied : Obj;
entity abat-jour : Obj;
assert Dir-ext(pied, abat-jour, lampe, haut-grav);
assert Can-Use(lampe);
)");
    CHECK(tt::st(s, "Orient-haut(haut-grav, lampe)") == Status::Entailed);
}

TEST_CASE("devant chains through equal directions") {
    auto s = tt::scene_file("devant.scene");
    CHECK(tt::st(s, "Etre-devant-i(tabouret, max, d2)") == Status::Entailed);
    CHECK(tt::st(s, "In-sp(tabouret, max, d2)") == Status::Entailed);
    auto n = tt::scene_file("devant-sans.scene");
    CHECK(tt::st(n, "Etre-devant-i(tabouret, max, d2)") == Status::Unknown);
}

TEST_CASE("in-space is read from the Allen relation") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
direction d;
assert Allen(a, b, d, {>});
)");
    CHECK(tt::st(s, "In-sp(a, b, d)") == Status::Entailed);
    CHECK(tt::st(s, "In-sp(b, a, d)") == Status::Refuted);
}
