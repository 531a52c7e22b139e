// Qualitative distance: Closer / Equidist over the distance domain.
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

IndId arg(const Kb& kb, FactId f, int i) { return kb.fact(f).atom.a[size_t(i)]; }

FactId closer(Kb& kb, bool pos, RuleId r, std::vector<FactId> prem, IndId x, IndId y, IndId z) {
    return kb.derive_v(A(Rel::Closer, x, y, z), pos, r, prem);
}

void fire_closer(Kb& kb, FactId id, bool pos, IndId x, IndId y, IndId z) {
    for (IndId v : {x, y, z}) kb.touch_distance(v);
    auto dom = kb.distance_domain();
    if (pos) {
        closer(kb, false, R::A11, {id}, x, z, y);
        kb.derive(A(Rel::Equidist, x, y, z), false, R::D27, {id});
        kb.derive(A(Rel::Equidist, x, z, y), false, R::D27, {id});
        kb.derive(A(Rel::C, x, z), false, R::A15, {id});
        kb.derive(A(Rel::P, y, z), false, R::A19, {id});
        for (IndId t : dom) {
            if (auto n = no(kb, Rel::Closer, x, y, t)) closer(kb, true, R::A12, {id, *n}, x, t, z);
            if (auto n = no(kb, Rel::Closer, x, t, z)) closer(kb, true, R::A14, {id, *n}, x, y, t);
        }
        if (auto n = no(kb, Rel::Closer, z, y, x)) closer(kb, true, R::A13, {id, *n}, y, x, z);
        if (auto n = no(kb, Rel::Closer, y, x, z)) closer(kb, true, R::A13, {id, *n}, z, y, x);
        return;
    }
    // this = ~Closer(x,y,z)
    for (FactId f : with(kb, Rel::Closer, true, 0, x)) {
        IndId a = arg(kb, f, 1), b = arg(kb, f, 2);
        if (a == y) closer(kb, true, R::A12, {f, id}, x, z, b);  // Closer(x,y,b) & ~Closer(x,y,z)
        if (b == z) closer(kb, true, R::A14, {f, id}, x, a, y);  // Closer(x,a,z) & ~Closer(x,y,z)
    }
    // A13 both ways
    if (auto f = yes(kb, Rel::Closer, z, y, x)) closer(kb, true, R::A13, {*f, id}, y, z, x);
    if (auto f = yes(kb, Rel::Closer, y, x, z)) closer(kb, true, R::A13, {*f, id}, z, x, y);
    // ~Closer(z',y',x') & ~Closer(y',x',z') -> ~Closer(x',y',z')
    if (auto f = no(kb, Rel::Closer, y, z, x)) closer(kb, false, R::A13, {id, *f}, z, y, x);
    if (auto f = no(kb, Rel::Closer, z, x, y)) closer(kb, false, R::A13, {*f, id}, y, x, z);
    // ~Closer(x,y,t) & ~Closer(x,t,z) -> ~Closer(x,y,z)
    for (FactId f : with(kb, Rel::Closer, false, 0, x)) {
        IndId a = arg(kb, f, 1), b = arg(kb, f, 2);
        if (a == z && b != y) closer(kb, false, R::A12, {id, f}, x, y, b);
        if (b == y && a != z) closer(kb, false, R::A12, {f, id}, x, a, z);
    }
    if (auto f = no(kb, Rel::Closer, x, z, y)) {
        kb.derive(A(Rel::Equidist, x, y, z), true, R::D27, {id, *f});
        kb.derive(A(Rel::Equidist, x, z, y), true, R::D27, {*f, id});
    }
    if (auto f = no(kb, Rel::Equidist, x, z, y)) closer(kb, true, R::D27, {*f, id}, x, z, y);
    if (auto f = no(kb, Rel::Equidist, x, y, z)) closer(kb, true, R::D27, {*f, id}, x, z, y);
}

void fire_equidist(Kb& kb, FactId id, bool pos, IndId x, IndId y, IndId z) {
    for (IndId v : {x, y, z}) kb.touch_distance(v);
    if (pos) {
        closer(kb, false, R::D27, {id}, x, y, z);
        closer(kb, false, R::D27, {id}, x, z, y);
        kb.derive(A(Rel::Equidist, x, z, y), true, R::D27, {id});
    } else {
        kb.derive(A(Rel::Equidist, x, z, y), false, R::D27, {id});
        if (auto f = no(kb, Rel::Closer, x, y, z)) closer(kb, true, R::D27, {id, *f}, x, z, y);
        if (auto f = no(kb, Rel::Closer, x, z, y)) closer(kb, true, R::D27, {id, *f}, x, y, z);
    }
}

// A15-A19 tie the topology to distances inside the domain.
void fire_topology(Kb& kb, FactId id, Rel r, bool pos, IndId x, IndId y) {
    if (!kb.in_distance(x) || !kb.in_distance(y)) return;
    auto dom = kb.distance_domain();
    if (r == Rel::C && pos) {
        for (IndId z : dom) closer(kb, false, R::A15, {id}, x, z, y);
        for (FactId f : with(kb, Rel::C, false, 0, x)) {
            IndId z = arg(kb, f, 1);
            if (kb.in_distance(z)) closer(kb, true, R::A16, {id, f}, x, y, z);
        }
    } else if (r == Rel::C && !pos) {
        // C(x,x) by A1
        closer(kb, true, R::A16, {id}, x, x, y);
        for (FactId f : with(kb, Rel::C, true, 0, x)) {
            IndId w = arg(kb, f, 1);
            if (kb.in_distance(w)) closer(kb, true, R::A16, {f, id}, x, w, y);
        }
        for (FactId f : with(kb, Rel::WCont, true, 0, x)) {
            IndId w = arg(kb, f, 1);
            if (!kb.in_distance(w)) continue;
            closer(kb, false, R::A17, {f, id}, x, y, w);
            if (auto n = no(kb, Rel::WCont, x, y)) closer(kb, true, R::A18, {f, *n, id}, x, w, y);
        }
    } else if (r == Rel::WCont && pos) {
        for (FactId f : with(kb, Rel::C, false, 0, x)) {
            IndId z = arg(kb, f, 1);
            if (!kb.in_distance(z)) continue;
            closer(kb, false, R::A17, {id, f}, x, z, y);
            if (auto n = no(kb, Rel::WCont, x, z)) closer(kb, true, R::A18, {id, *n, f}, x, y, z);
        }
    } else if (r == Rel::WCont && !pos) {
        if (auto nc = no(kb, Rel::C, x, y))
            for (FactId f : with(kb, Rel::WCont, true, 0, x)) {
                IndId w = arg(kb, f, 1);
                if (kb.in_distance(w)) closer(kb, true, R::A18, {f, id, *nc}, x, w, y);
            }
    } else if (r == Rel::P && pos) {
        for (IndId z : dom) closer(kb, false, R::A19, {id}, z, x, y);
    }
}

}  // namespace

void fire_distance(Kb& kb, FactId id) {
    const Fact& f = kb.fact(id);
    Atom a = kb.canonical(f.atom);
    switch (a.rel) {
    case Rel::Closer: fire_closer(kb, id, f.positive, a.a[0], a.a[1], a.a[2]); break;
    case Rel::Equidist: fire_equidist(kb, id, f.positive, a.a[0], a.a[1], a.a[2]); break;
    case Rel::C:
    case Rel::WCont:
    case Rel::P: fire_topology(kb, id, a.rel, f.positive, a.a[0], a.a[1]); break;
    default: break;
    }
}

}  // namespace topos
