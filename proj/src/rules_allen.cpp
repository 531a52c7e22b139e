// Allen relations along a direction: meet, converse, axis reversal, composition,
// and their links to C, P, In-sp and Plus_haut.
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

bool is_best(const Kb& kb, FactId f) {
    const Atom& a = kb.fact(f).atom;
    auto b = kb.allen_fact(a.a[0], a.a[1], a.a[2]);
    return b && *b == f;
}

// Best Allen facts over the ordered pair (x, y), any direction.
std::vector<FactId> pair_facts(const Kb& kb, IndId x, IndId y) {
    std::vector<FactId> out;
    y = kb.terms().canon(y);
    for (FactId f : with(kb, Rel::Allen, true, 0, x))
        if (kb.terms().canon(kb.fact(f).atom.a[1]) == y && is_best(kb, f)) out.push_back(f);
    return out;
}

bool shapeless(const Kb& kb, EntityId e) { return kb.status(A(Rel::ComplexShape, e)) == Status::Entailed; }

void fire_allen_fact(Kb& kb, FactId id) {
    Atom a = kb.canonical(kb.fact(id).atom);
    IndId x = a.a[0], y = a.a[1];
    DirId d = a.a[2];
    AllenSet m(a.mask);
    kb.derive_allen(y, x, d, converse(m), R::AllenConv, {id});
    kb.derive_allen(x, y, kb.opposite(d), reverse_axis(m), R::AllenRev, {id});

    // composition on both sides, same direction
    for (FactId f : with(kb, Rel::Allen, true, 0, y)) {
        if (!is_best(kb, f)) continue;
        Atom b = kb.canonical(kb.fact(f).atom);
        if (b.a[2] != d || b.a[1] == x) continue;
        AllenSet s = compose(m, AllenSet(b.mask));
        if (!s.is_all())
            kb.derive_allen(x, b.a[1], d, s, R::AllenComp, {id, f}, m.glyph() + " ; " + AllenSet(b.mask).glyph() + " -> " + s.glyph());
    }
    for (FactId f : with(kb, Rel::Allen, true, 1, x)) {
        if (!is_best(kb, f)) continue;
        Atom b = kb.canonical(kb.fact(f).atom);
        if (b.a[2] != d || b.a[0] == y) continue;
        AllenSet s = compose(AllenSet(b.mask), m);
        if (!s.is_all())
            kb.derive_allen(b.a[0], y, d, s, R::AllenComp, {f, id}, AllenSet(b.mask).glyph() + " ; " + m.glyph() + " -> " + s.glyph());
    }

    if (m.subset_of(~kConnectedAllen)) kb.derive(A(Rel::C, x, y), false, R::A29, {id});
    if ((m & kPartAllen).empty()) kb.derive(A(Rel::P, x, y), false, R::Fn4, {id});
    if (auto c = yes(kb, Rel::C, x, y)) kb.derive_allen(x, y, d, kConnectedAllen, R::A29, {id, *c});
    if (auto p = yes(kb, Rel::P, x, y)) kb.derive_allen(x, y, d, kPartAllen, R::Fn4, {id, *p});
    if (auto p = yes(kb, Rel::P, y, x)) kb.derive_allen(x, y, d, converse(kPartAllen), R::Fn4, {id, *p});

    // D44 forward, one entity pair per referent pair
    bool in = m.subset_of(kInSpAllen);
    bool out = (m & kInSpAllen).empty();
    if (in || out) {
        for (EntityId t : kb.entities_at(x)) {
            if (shapeless(kb, t)) continue;
            for (EntityId s : kb.entities_at(y)) {
                if (shapeless(kb, s)) continue;
                kb.derive(A(Rel::InSp, t, s, d), in, R::D44, {id});
            }
        }
        if (d == kb.dirs().canon(kb.haut())) kb.derive(A(Rel::PlusHaut, x, y), in, R::PlusHautDef, {id});
    }
}

}  // namespace

void fire_allen(Kb& kb, FactId id) {
    const bool pos = kb.fact(id).positive;
    Atom a = kb.canonical(kb.fact(id).atom);
    switch (a.rel) {
    case Rel::Allen: fire_allen_fact(kb, id); break;
    case Rel::C:
        if (pos)
            for (FactId g : pair_facts(kb, a.a[0], a.a[1]))
                kb.derive_allen(a.a[0], a.a[1], kb.fact(g).atom.a[2], kConnectedAllen, R::A29, {g, id});
        break;
    case Rel::P:
        if (pos) {
            for (FactId g : pair_facts(kb, a.a[0], a.a[1]))
                kb.derive_allen(a.a[0], a.a[1], kb.fact(g).atom.a[2], kPartAllen, R::Fn4, {g, id});
            for (FactId g : pair_facts(kb, a.a[1], a.a[0]))
                kb.derive_allen(a.a[1], a.a[0], kb.fact(g).atom.a[2], converse(kPartAllen), R::Fn4, {g, id});
        }
        break;
    case Rel::InSp: {
        IndId t = kb.sref(a.a[0]), s = kb.sref(a.a[1]);
        kb.derive_allen(t, s, a.a[2], pos ? kInSpAllen : ~kInSpAllen, R::D44, {id});
        break;
    }
    case Rel::PlusHaut:
        kb.derive_allen(a.a[0], a.a[1], kb.haut(), pos ? kInSpAllen : ~kInSpAllen, R::PlusHautDef, {id});
        break;
    default: break;
    }
}

}  // namespace topos
