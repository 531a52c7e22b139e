#include <random>

#include "doctest.h"
#include "scene_util.hpp"
#include "topos/dsl/printer.hpp"

using namespace topos;
using namespace topos::dsl;
using tt::Status;

namespace {
SourceLoc error_loc(const std::string& text) {
    try {
        tt::scene(text);
    } catch (const DslError& e) {
        return e.loc();
    }
    return {};
}
}  // namespace

TEST_CASE("statements parse") {
    auto doc = parse(R"(
# comment
entity île : Loc attrs {HSize:large};
direction d1, d2;
assert not C(île, sum(i(île), c(île)));
assume not O(île, île);
dirfact Kd(d1, d2, opp(d1));
option closed_stabilization;
query TDs(île, île) expect unknown;
)");
    REQUIRE(doc.stmts.size() == 7);
    CHECK(doc.stmts[0].kind == StmtKind::Entity);
    CHECK(doc.stmts[0].names[0] == "île");
    CHECK(doc.stmts[0].attrs[0].value == "large");
    CHECK(doc.stmts[1].names.size() == 2);
    CHECK_FALSE(doc.stmts[2].lit.positive);
    CHECK(doc.stmts[2].lit.args[1].kind == Expr::Kind::Call);
    CHECK(doc.stmts[6].expect == "unknown");
}

TEST_CASE("printing round-trips") {
    auto doc = parse_file(std::string(TOPOS_SOURCE_DIR) + "/scenes/devant.scene");
    auto again = parse(print(doc));
    CHECK(again == doc);
    CHECK(print(again) == print(doc));
}

TEST_CASE("errors carry their location") {
    auto loc = error_loc("entity livre : Obj;\nassert Dans(livre);\n");
    CHECK(loc.line == 2);
    auto u = error_loc("entity a : Obj;\n\nassert P(a, b);\n");
    CHECK(u.line == 3);
    CHECK(u.col == 13);
    CHECK_THROWS_AS(parse("entity a : Obj\n"), DslError);
    CHECK_THROWS_AS(parse("assert P(a, b;\n"), DslError);
    CHECK_THROWS_AS(tt::scene("entity a : Thing;\n"), DslError);
    CHECK_THROWS_AS(tt::scene("entity a : Obj;\nassert Nope(a);\n"), DslError);
}

TEST_CASE("sort errors") {
    CHECK_THROWS(tt::scene("entity a : Obj;\ndirection d;\nassert Kd(a, d, d);\n"));
    CHECK_THROWS(tt::scene("entity a : Obj;\nassert Allen(a, a, a, {<});\n"));
}

TEST_CASE("literal parsing") {
    auto l = parse_literal("Allen(a, b, opp(d), {<, mi})");
    CHECK(l.rel == "Allen");
    REQUIRE(l.args.size() == 4);
    CHECK(l.args[3].kind == Expr::Kind::Set);
    CHECK(l.args[3].items.size() == 2);
    CHECK(parse_literal(print_literal(l)) == l);
}

TEST_CASE("scene queries carry their expectations") {
    auto s = tt::scene_file("paul-ile.scene");
    REQUIRE_FALSE(s.queries.empty());
    for (const auto& q : s.queries) {
        REQUIRE(q.expect.has_value());
        auto v = s.kb.query(q.lit, s.limits);
        CHECK(v.status == *q.expect);
    }
}

TEST_CASE("names with accents and hyphens") {
    auto s = tt::scene("entity tête-de-lit : Obj;\nentity lit : Obj;\nassert P(tête-de-lit, lit);\n");
    CHECK(tt::st(s, "P(tête-de-lit, lit)") == Status::Entailed);
}
