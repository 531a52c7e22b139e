// Direction algebra: Kd, opposite, median, orthogonal and sum sets.
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

DirId arg(const Kb& kb, FactId f, int i) { return kb.fact(f).atom.a[size_t(i)]; }

FactId kd(Kb& kb, bool pos, RuleId r, std::vector<FactId> prem, DirId a, DirId b, DirId c) {
    return kb.derive_v(A(Rel::Kd, a, b, c), pos, r, std::move(prem));
}

std::optional<FactId> distinct(const Kb& kb, DirId a, DirId b) {
    if (kb.dirs().canon(a) == kb.dirs().canon(kb.opposite(b))) {
        // a = -b differs from b unless the store says otherwise
        if (auto f = no(kb, Rel::DirEq, a, b)) return f;
    }
    return no(kb, Rel::DirEq, a, b);
}

void fire_kd(Kb& kb, FactId id, bool pos, DirId a, DirId b, DirId c) {
    DirId na = kb.opposite(a), nb = kb.opposite(b), nc = kb.opposite(c);
    if (pos) {
        if (b == c) {
            kd(kb, false, R::A20, {id}, a, b, c);
            return;
        }
        kb.derive(A(Rel::DirEq, b, c), false, R::KdNeq, {id});
        kd(kb, false, R::KdAsym, {id}, a, c, b);
        kd(kb, true, R::A25, {id}, a, nc, nb);
        kd(kb, true, R::A26, {id}, na, nb, nc);
        kb.derive(A(Rel::InMed, a, b, c), false, R::D30, {id});
        kb.derive(A(Rel::InMed, a, c, b), false, R::D30, {id});
        if (kb.dirs().canon(c) == kb.dirs().canon(nb)) {
            kb.derive(A(Rel::InOrtho, a, b), false, R::D29, {id});
            kb.derive(A(Rel::InOrtho, a, c), false, R::D29, {id});
        }
        // A21 in both positions
        for (FactId f : with(kb, Rel::Kd, true, 0, a)) {
            DirId p = arg(kb, f, 1), q = arg(kb, f, 2);
            if (p == c) kd(kb, true, R::A21, {id, f}, a, b, q);
            if (q == b) kd(kb, true, R::A21, {f, id}, a, p, c);
        }
        // A21 contrapositives against negative facts
        for (FactId f : with(kb, Rel::Kd, false, 0, a)) {
            DirId p = arg(kb, f, 1), q = arg(kb, f, 2);
            if (p == b && q != c) kd(kb, false, R::A21, {id, f}, a, c, q);  // ~Kd(a,b,q) & Kd(a,b,c) -> ~Kd(a,c,q)
            if (q == c && p != b) kd(kb, false, R::A21, {id, f}, a, p, b);  // ~Kd(a,p,c) & Kd(a,b,c) -> ~Kd(a,p,b)
        }
        // A22
        if (auto f = yes(kb, Rel::Kd, c, a, b)) kd(kb, true, R::A22, {id, *f}, b, a, c);
        if (auto f = yes(kb, Rel::Kd, b, c, a)) kd(kb, true, R::A22, {*f, id}, c, b, a);
        // A28
        for (FactId f : with(kb, Rel::InSum, true, 1, b)) {
            if (arg(kb, f, 2) != c) continue;
            DirId e = arg(kb, f, 0);
            kd(kb, true, R::A28, {id, f}, c, e, a);
            kd(kb, true, R::A28, {id, f}, nb, kb.opposite(e), a);
        }
        // A24: ~Kd(a,c,b) is already implied; ~InMed(a,b,c) with Kd(a,b,c) is trivial
        return;
    }
    kd(kb, false, R::A25, {id}, a, nc, nb);
    kd(kb, false, R::A26, {id}, na, nb, nc);
    if (b == c) return;
    // ~Kd(a,b,c) & Kd(a,b,p) -> ~Kd(a,c,p); ~Kd(a,b,c) & Kd(a,p,c) -> ~Kd(a,b,p)
    for (FactId f : with(kb, Rel::Kd, true, 0, a)) {
        DirId p = arg(kb, f, 1), q = arg(kb, f, 2);
        if (p == b && q != c) kd(kb, false, R::A21, {f, id}, a, q, c);
        if (q == c && p != b) kd(kb, false, R::A21, {f, id}, a, b, p);
    }
    auto neq = distinct(kb, b, c);
    if (auto other = no(kb, Rel::Kd, a, c, b); other && neq) {
        kb.derive(A(Rel::InMed, a, b, c), true, R::D30, {id, *other, *neq});
        kb.derive(A(Rel::InMed, a, c, b), true, R::D30, {*other, id, *neq});
    }
    if (neq) {
        // A24 unit resolution, distinctness from recorded facts
        auto ab = distinct(kb, a, b), ac = distinct(kb, a, c);
        if (ab && ac)
            if (auto nm = no(kb, Rel::InMed, a, b, c)) kd(kb, true, R::A24, {id, *nm, *neq, *ab, *ac}, a, c, b);
    }
    if (kb.dirs().canon(c) == kb.dirs().canon(nb)) {
        if (auto other = no(kb, Rel::Kd, a, c, b)) {
            kb.derive(A(Rel::InOrtho, a, b), true, R::D29, {id, *other});
            kb.derive(A(Rel::InOrtho, a, c), true, R::D29, {id, *other});
        }
    }
}

void fire_inmed(Kb& kb, FactId id, bool pos, DirId d, DirId d1, DirId d2) {
    if (pos) {
        kb.derive(A(Rel::InMed, d, d2, d1), true, R::D30, {id});
        if (d1 == d2) {
            if (d != d1) kb.derive(A(Rel::DirEq, d, d1), true, R::D30, {id});
            return;
        }
        if (auto neq = distinct(kb, d1, d2)) {
            kd(kb, false, R::D30, {id, *neq}, d, d1, d2);
            kd(kb, false, R::D30, {id, *neq}, d, d2, d1);
        }
        // A27
        for (FactId f : with(kb, Rel::InMed, true, 0, d)) {
            DirId p = arg(kb, f, 1), q = arg(kb, f, 2);
            if (p == d2 && q != d1)
                if (auto ne = distinct(kb, d1, q)) kb.derive(A(Rel::InMed, d, d1, q), true, R::A27, {id, f, *ne});
            if (q == d1 && p != d2)
                if (auto ne = distinct(kb, p, d2)) kb.derive(A(Rel::InMed, d, p, d2), true, R::A27, {f, id, *ne});
        }
        for (FactId f : with(kb, Rel::Kd, true, 0, d1)) {
            // D31 refutation: some median d4 with Kd(d1, d4, d3) excludes d3 from the sum
            DirId d4 = arg(kb, f, 1), d3 = arg(kb, f, 2);
            if (d4 == d) kb.derive(A(Rel::InSum, d3, d1, d2), false, R::D31, {id, f});
        }
        return;
    }
    kb.derive(A(Rel::InMed, d, d2, d1), false, R::D30, {id});
    kb.derive(A(Rel::InSum, d, d1, d2), false, R::D31, {id});
    if (d1 == d2) return;
    if (auto neq = distinct(kb, d1, d2)) {
        if (auto f = no(kb, Rel::Kd, d, d1, d2)) kd(kb, true, R::D30, {id, *f, *neq}, d, d2, d1);
        if (auto f = no(kb, Rel::Kd, d, d2, d1)) kd(kb, true, R::D30, {id, *f, *neq}, d, d1, d2);
    }
}

void fire_inortho(Kb& kb, FactId id, bool pos, DirId d2, DirId d1) {
    DirId n1 = kb.opposite(d1);
    if (pos) {
        kd(kb, false, R::D29, {id}, d2, d1, n1);
        kd(kb, false, R::D29, {id}, d2, n1, d1);
        kb.derive(A(Rel::InOrtho, d2, n1), true, R::D29, {id});
    } else {
        kb.derive(A(Rel::InOrtho, d2, n1), false, R::D29, {id});
        if (auto f = no(kb, Rel::Kd, d2, d1, n1)) kd(kb, true, R::D29, {id, *f}, d2, n1, d1);
        if (auto f = no(kb, Rel::Kd, d2, n1, d1)) kd(kb, true, R::D29, {id, *f}, d2, d1, n1);
    }
}

void fire_insum(Kb& kb, FactId id, bool pos, DirId d3, DirId d1, DirId d2) {
    if (!pos) {
        kb.derive(A(Rel::InSum, d3, d2, d1), false, R::D31, {id});
        return;
    }
    kb.derive(A(Rel::InSum, d3, d2, d1), true, R::D31, {id});
    kb.derive(A(Rel::InMed, d3, d1, d2), true, R::D31, {id});
    for (FactId f : with(kb, Rel::InMed, true, 1, d1)) {
        if (arg(kb, f, 2) != d2) continue;
        kd(kb, false, R::D31, {id, f}, d1, arg(kb, f, 0), d3);
    }
    for (FactId f : with(kb, Rel::Kd, true, 1, d1)) {
        if (arg(kb, f, 2) != d2) continue;
        DirId d = arg(kb, f, 0);
        kd(kb, true, R::A28, {f, id}, d2, d3, d);
        kd(kb, true, R::A28, {f, id}, kb.opposite(d1), kb.opposite(d3), d);
    }
}

void fire_direq(Kb& kb, FactId id, bool pos, DirId a, DirId b) {
    if (pos) {
        if (a != b) kb.merge_directions(a, b);
        return;
    }
    if (a == b) return;  // conflict already recorded against the reflexive fact
    kb.derive(A(Rel::DirEq, b, a), false, R::DirCong, {id});
    kb.derive(A(Rel::DirEq, kb.opposite(a), kb.opposite(b)), false, R::DirCong, {id});
    // D28 with D3 = a and -D1 = b
    kd(kb, true, R::D28, {id}, kb.opposite(b), a, b);
}

}  // namespace

void direction_axioms(Kb& kb, DirId d) {
    DirId n = kb.opposite(d);
    kb.derive(A(Rel::DirEq, d, n), false, RuleId::D28, {}, "a direction differs from its opposite");
    kb.derive(A(Rel::Kd, d, d, n), true, RuleId::D28, {});
}

void fire_direction(Kb& kb, FactId id) {
    const Fact& f = kb.fact(id);
    Atom a = kb.canonical(f.atom);
    switch (a.rel) {
    case Rel::Kd: fire_kd(kb, id, f.positive, a.a[0], a.a[1], a.a[2]); break;
    case Rel::InMed: fire_inmed(kb, id, f.positive, a.a[0], a.a[1], a.a[2]); break;
    case Rel::InOrtho: fire_inortho(kb, id, f.positive, a.a[0], a.a[1]); break;
    case Rel::InSum: fire_insum(kb, id, f.positive, a.a[0], a.a[1], a.a[2]); break;
    case Rel::DirEq: fire_direq(kb, id, f.positive, a.a[0], a.a[1]); break;
    default: break;
    }
}

}  // namespace topos
