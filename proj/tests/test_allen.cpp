#include "doctest.h"
#include "scene_util.hpp"
#include "topos/allen.hpp"

using namespace topos;
using tt::Status;

namespace {
AllenSet set(std::initializer_list<AllenRel> rs) {
    AllenSet s;
    for (auto r : rs) s = s | AllenSet(r);
    return s;
}
constexpr auto kAll = kAllenCount;
}  // namespace

TEST_CASE("names round-trip and glyphs") {
    for (int i = 0; i < kAll; ++i) {
        auto r = AllenRel(i);
        CHECK(parse_allen_rel(allen_name(r)) == r);
    }
    CHECK(set({AllenRel::MetBy, AllenRel::After}).glyph() == "mi>");
    CHECK(set({AllenRel::MetBy, AllenRel::After}).str() == "{>,mi}");
    CHECK(AllenSet().glyph() == "0");
}

TEST_CASE("frozen compositions") {
    using R = AllenRel;
    CHECK(compose(R::MetBy, R::After) == AllenSet(R::After));
    CHECK(compose(R::After, R::MetBy) == AllenSet(R::After));
    CHECK(compose(R::Meets, R::Meets) == AllenSet(R::Before));
    CHECK(compose(R::Overlaps, R::Overlaps) == set({R::Before, R::Meets, R::Overlaps}));
    CHECK(compose(R::During, R::During) == AllenSet(R::During));
    CHECK(compose(R::Before, R::After).is_all());
    // the In-sp chain: {mi,>} ; {mi,>} -> {>}
    auto insp = set({R::MetBy, R::After});
    CHECK(compose(insp, insp) == AllenSet(R::After));
}

TEST_CASE("algebraic laws over all pairs") {
    for (int i = 0; i < kAll; ++i) {
        auto a = AllenRel(i);
        CHECK(converse(converse(a)) == a);
        CHECK(reverse_axis(reverse_axis(a)) == a);
        CHECK(compose(a, AllenRel::Equal) == AllenSet(a));
        CHECK(compose(AllenRel::Equal, a) == AllenSet(a));
        for (int j = 0; j < kAll; ++j) {
            auto b = AllenRel(j);
            CHECK(converse(compose(a, b)) == compose(converse(b), converse(a)));
            CHECK(reverse_axis(compose(a, b)) == compose(reverse_axis(a), reverse_axis(b)));
            CHECK(!compose(a, b).empty());
        }
    }
}

TEST_CASE("composition is associative on sets") {
    for (int i = 0; i < kAll; ++i)
        for (int j = 0; j < kAll; ++j)
            for (int k = 0; k < kAll; ++k) {
                AllenSet a{AllenRel(i)}, b{AllenRel(j)}, c{AllenRel(k)};
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
            }
}

TEST_CASE("distinguished sets") {
    using R = AllenRel;
    CHECK(kPartAllen == set({R::Starts, R::During, R::Finishes, R::Equal}));
    CHECK(kInSpAllen == set({R::MetBy, R::After}));
    CHECK(!kConnectedAllen.has(R::Before));
    CHECK(!kConnectedAllen.has(R::After));
    CHECK(kConnectedAllen.size() == 11);
}

TEST_CASE("engine intersects asserted Allen sets") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
direction d;
assert Allen(a, b, d, {<, m});
assert Allen(a, b, d, {m, o});
)");
    CHECK(tt::st(s, "Allen(a, b, d, {m})") == Status::Entailed);
    CHECK(tt::st(s, "Allen(a, b, d, {<})") == Status::Refuted);
    CHECK(tt::st(s, "Allen(b, a, d, {mi})") == Status::Entailed);
    // the opposite direction sees the axis reversed
    CHECK(tt::st(s, "Allen(a, b, opp(d), {mi})") == Status::Entailed);
}

TEST_CASE("empty Allen intersection is a conflict") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
direction d;
assert Allen(a, b, d, {<});
assert Allen(a, b, d, {>});
)");
    CHECK_FALSE(tt::consistent(s));
}

TEST_CASE("parts sit inside their whole on every axis") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
direction d;
assert P(a, b);
)");
    CHECK(tt::st(s, "Allen(a, b, d, {s, d, f, =})") == Status::Entailed);
    CHECK(tt::st(s, "Allen(a, b, d, {<})") == Status::Refuted);
}

TEST_CASE("connected individuals are not separated on an axis") {
    auto s = tt::scene(R"(
entity a : Obj;
entity b : Obj;
direction d;
assert C(a, b);
)");
    CHECK(tt::st(s, "Allen(a, b, d, {<})") == Status::Refuted);
    CHECK(tt::st(s, "Allen(a, b, d, {>})") == Status::Refuted);
}
