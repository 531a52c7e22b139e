#include <random>

#include "doctest.h"
#include "scene_util.hpp"
#include "topos/export.hpp"
#include "topos/proof.hpp"

using namespace topos;
using tt::Status;

namespace {
const char* kChain = R"(
entity a : Obj;
entity b : Obj;
entity c : Obj;
entity d : Obj;
assert P(a, b);
assert P(b, c);
assert EC(c, d);
assert Closer(a, b, d);
)";

std::vector<std::string> fact_lines(Kb& kb) {
    std::vector<std::string> out;
    for (FactId f = 0; f < kb.fact_count(); ++f) out.push_back(kb.atom_str(kb.fact(f).atom) + (kb.fact(f).positive ? "" : " -"));
    return out;
}
}  // namespace

TEST_CASE("saturation is deterministic") {
    auto s1 = tt::scene(kChain);
    auto s2 = tt::scene(kChain);
    auto r1 = s1.kb.saturate(s1.limits);
    auto r2 = s2.kb.saturate(s2.limits);
    CHECK(r1.facts == r2.facts);
    CHECK(r1.derived == r2.derived);
    CHECK(fact_lines(s1.kb) == fact_lines(s2.kb));
    CHECK(facts_json(s1.kb, true).dump() == facts_json(s2.kb, true).dump());
}

TEST_CASE("saturation reaches a fixpoint") {
    auto s = tt::scene(kChain);
    auto r1 = s.kb.saturate(s.limits);
    auto r2 = s.kb.saturate(s.limits);
    CHECK(r2.facts == r1.facts);
    CHECK_FALSE(r1.partial);
    CHECK(s.kb.saturated());
}

TEST_CASE("every fact replays") {
    auto s = tt::scene(kChain);
    s.kb.saturate(s.limits);
    for (FactId f = 0; f < s.kb.fact_count(); ++f) {
        auto r = replay(s.kb, f);
        CAPTURE(s.kb.atom_str(s.kb.fact(f).atom));
        CHECK(r.ok);
    }
}

TEST_CASE("proofs explain entailed queries") {
    auto s = tt::scene(kChain);
    auto v = tt::ask(s, "P(a, c)");
    REQUIRE(v.status == Status::Entailed);
    REQUIRE(v.proof.valid());
    auto text = explain_text(s.kb, v.proof);
    CHECK(text.find("P(a, b)") != std::string::npos);
    CHECK(text.find("P(b, c)") != std::string::npos);
    auto j = explain_json(s.kb, v.proof);
    CHECK(j.is_object());
    auto rules = rules_used(s.kb, v.proof.fact);
    CHECK(std::find(rules.begin(), rules.end(), std::string("T-P-trans")) != rules.end());
}

TEST_CASE("handles from another base are stale") {
    auto s = tt::scene(kChain);
    auto other = tt::scene(kChain);
    auto v = tt::ask(s, "P(a, c)");
    REQUIRE(v.proof.valid());
    CHECK(s.kb.resolve(v.proof) == v.proof.fact);
    CHECK_THROWS_AS(other.kb.resolve(v.proof), KbError);
}

TEST_CASE("budget yields a partial result") {
    auto s = tt::scene(kChain);
    SaturationLimits lim;
    lim.budget = 3;
    auto r = s.kb.saturate(lim);
    CHECK(r.partial);
    CHECK(saturation_json(r)["partial"] == true);
}

TEST_CASE("depth limit is monotone") {
    auto shallow = tt::scene(kChain);
    auto deep = tt::scene(kChain);
    SaturationLimits l1;
    l1.depth = 1;
    SaturationLimits l3;
    l3.depth = 3;
    auto r1 = shallow.kb.saturate(l1);
    auto r3 = deep.kb.saturate(l3);
    CHECK(r1.facts <= r3.facts);
}

TEST_CASE("assumptions are defaults and can be blocked") {
    auto open = tt::scene_file("trois-objets.scene");
    auto r = open.kb.saturate(open.limits);
    CHECK_FALSE(r.defaults_applied.empty());
    CHECK(tt::st(open, "TDs(clef, armoire)") == Status::Entailed);

    auto blocked = tt::scene_file("trois-objets-part.scene");
    auto rb = blocked.kb.saturate(blocked.limits);
    CHECK_FALSE(rb.defaults_blocked.empty());
    CHECK(tt::consistent(blocked));
}

TEST_CASE("defaults can be switched off") {
    auto s = tt::scene_file("trois-objets.scene");
    SaturationLimits lim = s.limits;
    lim.defaults = false;
    auto v = s.kb.query(tt::lit(s, "TDs(clef, armoire)"), lim);
    CHECK(v.status != Status::Entailed);
}

TEST_CASE("negated queries flip the verdict") {
    auto s = tt::scene(kChain);
    CHECK(tt::st(s, "not P(a, c)") == Status::Refuted);
    CHECK(tt::st(s, "not O(c, d)") == Status::Entailed);
}

TEST_CASE("verdict JSON") {
    auto s = tt::scene(kChain);
    auto l = tt::lit(s, "P(a, c)");
    auto v = s.kb.query(l, s.limits);
    auto j = verdict_json(s.kb, l, v);
    CHECK(j["verdict"] == "entailed");
    CHECK(j["pragmatics"] == "not evaluated");
}

TEST_CASE("conflicts are reported, not thrown") {
    auto s = tt::scene(std::string(kChain) + "assert not P(a, c);\n");
    auto r = s.kb.saturate(s.limits);
    CHECK(r.conflicts > 0);
    REQUIRE_FALSE(s.kb.conflicts().empty());
    CHECK(conflicts_json(s.kb).size() == s.kb.conflicts().size());
}

TEST_CASE("random scenes replay and repeat") {
    std::mt19937 rng(7);
    const char* rels[] = {"C", "P", "PP", "O", "EC", "NTP", "WCont"};
    for (int round = 0; round < 40; ++round) {
        std::string text = "entity a : Obj;\nentity b : Obj;\nentity c : Mat;\nentity d : Loc;\n";
        const char* names[] = {"a", "b", "c", "d"};
        for (int i = 0; i < 4; ++i) {
            std::string neg = rng() % 4 == 0 ? "not " : "";
            text += "assert " + neg + rels[rng() % 7] + "(" + names[rng() % 4] + ", " + names[rng() % 4] + ");\n";
        }
        CAPTURE(text);
        auto s1 = tt::scene(text);
        auto s2 = tt::scene(text);
        s1.kb.saturate(s1.limits);
        s2.kb.saturate(s2.limits);
        CHECK(fact_lines(s1.kb) == fact_lines(s2.kb));
        for (FactId f = 0; f < s1.kb.fact_count(); ++f) CHECK(replay(s1.kb, f).ok);
    }
}
