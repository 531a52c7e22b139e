#include "doctest.h"
#include "scene_util.hpp"
#include "topos/entities.hpp"
#include "topos/meronymy.hpp"
#include "topos/proof.hpp"

using namespace topos;
using tt::Status;
using K = MeronymyKind;

TEST_CASE("kind names") {
    for (int i = 0; i < kMeronymyKinds; ++i) {
        auto k = K(i);
        CHECK(parse_kind(kind_name(k)) == k);
        CHECK(kind_of(kind_rel(k)) == k);
    }
    CHECK_FALSE(kind_of(Rel::P).has_value());
}

TEST_CASE("default composition table") {
    auto t = CompositionTable::defaults();
    CHECK(t.compose(K::Component, K::Component) == K::Component);
    CHECK(t.compose(K::Member, K::Subcoll) == K::Member);
    CHECK(t.compose(K::Subcoll, K::Subcoll) == K::Subcoll);
    CHECK_FALSE(t.compose(K::Member, K::Component).has_value());
    CHECK_FALSE(t.compose(K::Component, K::Member).has_value());
}

TEST_CASE("shipped table matches the defaults") {
    auto t = CompositionTable::load(std::string(TOPOS_SOURCE_DIR) + "/config/meronymy.table");
    CHECK(t.str() == CompositionTable::defaults().str());
}

TEST_CASE("table parsing") {
    auto t = CompositionTable::parse("# c\nPiece ; Component -> Piece\n");
    CHECK(t.compose(K::Piece, K::Component) == K::Piece);
    CHECK_FALSE(t.compose(K::Component, K::Component).has_value());
    CHECK_THROWS_AS(CompositionTable::parse("Piece ; Nope -> Piece\n"), KbError);
    CHECK_THROWS_AS(CompositionTable::parse("Piece Piece\n"), KbError);
    auto r = CompositionTable::parse(CompositionTable::defaults().str());
    CHECK(r.str() == CompositionTable::defaults().str());
}

TEST_CASE("class constraints on part kinds") {
    Kb kb;
    auto a = kb.declare_entity("a", EntityClass::Obj);
    auto b = kb.declare_entity("b", EntityClass::Obj);
    auto s = kb.declare_entity("s", EntityClass::Subst);
    CHECK_NOTHROW(assert_part(kb, K::Component, a, b));
    CHECK_THROWS_AS(assert_part(kb, K::Component, a, a), KbError);
    CHECK_THROWS_AS(assert_part(kb, K::Member, a, b), KbError);
    CHECK_THROWS_AS(assert_part(kb, K::Component, s, b), KbError);
    CHECK_THROWS_AS(assert_part(kb, K::SubstWh, a, b), KbError);
    try {
        assert_part(kb, K::Portion, a, b);
        FAIL("expected an error");
    } catch (const KbError& e) {
        CHECK(e.axiom() == "D36");
    }
}

TEST_CASE("kinds compose and imply Part") {
    auto s = tt::scene(R"(
entity roue : Obj;
entity velo : Obj;
entity rayon : Obj;
part Component(rayon, roue);
part Component(roue, velo);
)");
    CHECK(tt::st(s, "Component(rayon, velo)") == Status::Entailed);
    CHECK(tt::st(s, "Part(rayon, velo)") == Status::Entailed);
    CHECK(tt::st(s, "P(rayon, velo)") == Status::Entailed);
    CHECK(derive_parts(s.kb).size() == 3);
    auto derived = part_transitive_closure(s.kb);
    REQUIRE(derived.size() == 1);
    CHECK(derived[0].kind == K::Component);
    CHECK(derived[0].part == *s.kb.find_entity("rayon"));
    CHECK(derived[0].whole == *s.kb.find_entity("velo"));
}

TEST_CASE("a part is never inside its whole") {
    auto s = tt::scene(R"(
entity tiroir : Obj;
entity commode : Obj;
part Component(tiroir, commode);
)");
    CHECK(tt::st(s, "TDs(tiroir, commode)") == Status::Refuted);
    auto v = tt::ask(s, "TDs(tiroir, commode)");
    REQUIRE(v.proof.valid());
    auto used = rules_used(s.kb, v.proof.fact);
    CHECK(std::find(used.begin(), used.end(), std::string(rule_info(RuleId::Fn10).label)) != used.end());
}

TEST_CASE("pieces are self-connected") {
    auto s = tt::scene("entity cotentin : Loc;\nentity manche : Loc;\npart Piece(cotentin, manche);\n");
    CHECK(tt::st(s, "Con(cotentin)") == Status::Entailed);
}

TEST_CASE("members of subcollections") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
entity c : Obj;
entity sous : Obj;
entity tout : Obj;
assert Is-coll(sous, plural(a, b));
assert Is-coll(tout, plural(a, b, c));
part Subcoll(sous, tout);
part Member(a, sous);
)");
    CHECK(tt::st(s, "Member(a, tout)") == Status::Entailed);
}
