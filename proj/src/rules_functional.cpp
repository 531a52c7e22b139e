// Orientation (A44-A45, D37-D46), support (D47-D51, A46-A48) and the monotone
// half of containment (D52/D53 read forward, Dans).
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

uint32_t arg(const Kb& kb, FactId f, int i) { return kb.canonical(kb.fact(f).atom).a[size_t(i)]; }

bool in(std::optional<EntityClass> c, std::initializer_list<EntityClass> set) {
    return c && std::find(set.begin(), set.end(), *c) != set.end();
}

constexpr auto kObj = EntityClass::Obj;
constexpr auto kMat = EntityClass::Mat;
constexpr auto kLoc = EntityClass::Loc;
constexpr auto kSp = EntityClass::SpPort;

std::optional<IndId> interior_ind(Kb& kb, IndId x) {
    if (auto t = interior_term(kb, x)) return t;
    return try_make([&] { return kb.construct_interior(x); });
}

// ------------------------------------------------------------ orientation

void dir_ext_checks(Kb& kb, FactId id, EntityId y, EntityId z, EntityId x, DirId d) {
    DirId h = kb.dirs().canon(kb.haut()), b = kb.dirs().canon(kb.bas());
    auto cu = yes(kb, Rel::CanUse, x);
    if (cu && d == h) kb.derive(A(Rel::OrientHaut, d, x), true, R::D37, {id, *cu});
    if (cu && d == b) kb.derive(A(Rel::OrientBas, d, x), true, R::D38, {id, *cu});
    if (cu)
        if (auto iu = yes(kb, Rel::InUse, x)) {
            std::string pair = kb.ent_str(y) + ", " + kb.ent_str(z) + ", " + kb.ent_str(x);
            Literal up{Rel::DirEq, true, {d, kb.haut()}, {}};
            Literal down{Rel::DirEq, true, {d, kb.bas()}, {}};
            kb.add_default_candidate({R::D37Def, up, {id, *cu, *iu}, "D37 > dir-ext(" + pair + ") = haut-grav"});
            kb.add_default_candidate({R::D38Def, down, {id, *cu, *iu}, "D38 > dir-ext(" + pair + ") = bas-grav"});
        }
    if (auto og = yes(kb, Rel::OrientGen, x, d)) kb.derive(A(Rel::OrientAvant1, d, x), true, R::D40, {id, *og});
}

void fire_dir_ext(Kb& kb, FactId id, EntityId y, EntityId z, EntityId x, DirId d, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::Part, y, x), true, R::A44, {id});
    kb.derive(A(Rel::Part, z, x), true, R::A44, {id});
    kb.derive(A(Rel::Exts, kb.sref(y), kb.sref(z), kb.sref(x), d), true, R::A44, {id});
    // the swapped extremity pair points the other way
    for (FactId f : with(kb, Rel::DirExt, true, 2, x))
        if (arg(kb, f, 0) == z && arg(kb, f, 1) == y)
            kb.derive(A(Rel::DirEq, arg(kb, f, 3), kb.opposite(d)), true, R::A44, {id, f},
                      "swapped extremities give the opposite direction");
    dir_ext_checks(kb, id, y, z, x, d);
}

void refire_dir_ext(Kb& kb, EntityId x) {
    for (FactId f : with(kb, Rel::DirExt, true, 2, x))
        dir_ext_checks(kb, f, arg(kb, f, 0), arg(kb, f, 1), x, arg(kb, f, 3));
}

void fire_exts(Kb& kb, FactId id, IndId sy, IndId sz, IndId sx, DirId d) {
    // A44 read backward
    for (EntityId x : kb.entities_at(sx))
        for (EntityId y : kb.entities_at(sy))
            for (EntityId z : kb.entities_at(sz)) {
                auto py = yes(kb, Rel::Part, y, x), pz = yes(kb, Rel::Part, z, x);
                if (py && pz) kb.derive(A(Rel::DirExt, y, z, x, d), true, R::A44, {id, *py, *pz});
            }
}

void devant_from_insp(Kb& kb, FactId insp, EntityId y, EntityId x, DirId d) {
    if (auto f = yes(kb, Rel::OrientAvant, d, x)) kb.derive(A(Rel::DevantI, y, x, d), true, R::D45, {*f, insp});
    if (auto f = yes(kb, Rel::OrientArriere, d, x)) kb.derive(A(Rel::DerriereI, y, x, d), true, R::DerI, {*f, insp});
    // deictic readings anchored on a speaker s with x in front of s
    DirId nd = kb.opposite(d);
    for (FactId f : with(kb, Rel::DevantI, true, 0, x)) {
        EntityId s = arg(kb, f, 1);
        DirId e = arg(kb, f, 2);
        if (s == x || s == y) continue;
        auto sp = yes(kb, Rel::Speaker, s);
        if (!sp) continue;
        if (e == kb.dirs().canon(nd)) kb.derive(A(Rel::DevantD, y, x, d), true, R::D46, {f, *sp, insp});
        if (e == d) kb.derive(A(Rel::DerriereD, y, x, d), true, R::DerD, {f, *sp, insp});
    }
}

void fire_insp(Kb& kb, FactId id, EntityId y, EntityId x, DirId d, bool pos) {
    if (pos) {
        devant_from_insp(kb, id, y, x, d);
        return;
    }
    for (Rel r : {Rel::DevantI, Rel::DerriereI}) kb.derive(A(r, y, x, d), false, r == Rel::DevantI ? R::D45 : R::DerI, {id});
    kb.derive(A(Rel::DevantD, y, x, d), false, R::D46, {id});
    kb.derive(A(Rel::DerriereD, y, x, d), false, R::DerD, {id});
}

void fire_devant_i(Kb& kb, FactId id, EntityId y, EntityId x, DirId d, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::OrientAvant, d, x), true, R::D45, {id});
    kb.derive(A(Rel::InSp, y, x, d), true, R::D45, {id});
    // y = site of deictic readings where x is the speaker
    if (yes(kb, Rel::Speaker, x))
        for (Rel r : {Rel::InSp})
            for (FactId f : with(kb, r, true, 1, y)) kb.enqueue(f);
}

void fire_avant(Kb& kb, FactId id, Rel r, DirId d, EntityId x, bool pos) {
    DirId nd = kb.opposite(d);
    if (r == Rel::OrientAvant) {
        kb.derive(A(Rel::OrientArriere, nd, x), pos, R::A45, {id});
        if (!pos) {
            for (Rel k : {Rel::OrientAvant1, Rel::OrientAvant2, Rel::OrientAvant3}) kb.derive(A(k, d, x), false, R::D43, {id});
            for (FactId f : with(kb, Rel::InSp, true, 1, x))
                if (arg(kb, f, 2) == d) kb.derive(A(Rel::DevantI, arg(kb, f, 0), x, d), false, R::D45, {id, f});
            return;
        }
        for (FactId f : with(kb, Rel::InSp, true, 1, x))
            if (arg(kb, f, 2) == d) kb.derive(A(Rel::DevantI, arg(kb, f, 0), x, d), true, R::D45, {id, f});
        return;
    }
    if (r == Rel::OrientArriere) {
        kb.derive(A(Rel::OrientAvant, nd, x), pos, R::A45, {id});
        if (!pos) {
            for (FactId f : with(kb, Rel::InSp, true, 1, x))
                if (arg(kb, f, 2) == d) kb.derive(A(Rel::DerriereI, arg(kb, f, 0), x, d), false, R::DerI, {id, f});
            return;
        }
        for (FactId f : with(kb, Rel::InSp, true, 1, x))
            if (arg(kb, f, 2) == d) kb.derive(A(Rel::DerriereI, arg(kb, f, 0), x, d), true, R::DerI, {id, f});
        return;
    }
    // Avant1/2/3
    if (pos) kb.derive(A(Rel::OrientAvant, d, x), true, R::D43, {id});
    if (r == Rel::OrientAvant1 && pos) {
        // a user's front may settle D41/D42 for the objects it uses
        for (FactId f : with(kb, Rel::Utilise, true, 1, x)) kb.enqueue(f);
    }
}

// ---------------------------------------------------------------- support

std::optional<IndId> zone_of(const Kb& kb, IndId x, IndId y) {
    if (auto z = kb.terms().find_existing(TermKind::Skolem, {x, y}, "zone")) return kb.terms().canon(*z);
    return std::nullopt;
}

std::optional<IndId> make_zone(Kb& kb, IndId x, IndId y) {
    if (auto z = zone_of(kb, x, y)) return z;
    if (kb.entities_at(x).empty() || kb.entities_at(y).empty()) return std::nullopt;
    return try_make([&] { return kb.construct_skolem("zone", {x, y}); });
}

// Entity-sref pairs whose contact zone is z.
std::vector<std::pair<IndId, IndId>> zone_owners(const Kb& kb, IndId z) {
    std::vector<std::pair<IndId, IndId>> out;
    const auto& ts = kb.terms();
    z = ts.canon(z);
    for (IndId i = 0; i < ts.size(); ++i) {
        const Term& t = ts.term(i);
        if (t.kind == TermKind::Skolem && t.tag == "zone" && ts.canon(i) == z)
            out.push_back({ts.canon(t.args[0]), ts.canon(t.args[1])});
    }
    return out;
}

void check_sur(Kb& kb, EntityId x, EntityId y);

void check_cont(Kb& kb, IndId x, IndId y) {
    auto z1 = zone_of(kb, x, y), z2 = zone_of(kb, y, x);
    if (!z1 || !z2) return;
    auto cont = yes(kb, Rel::Cont, x, y);
    if (cont) {
        if (auto f = yes(kb, Rel::PlusHaut, *z1, *z2)) kb.derive(A(Rel::Cont1, x, y), true, R::D47, {*cont, *f});
        if (auto f = yes(kb, Rel::PlusHaut, *z2, *z1)) kb.derive(A(Rel::Cont3, x, y), true, R::Cont3Def, {*cont, *f});
        if (auto f = kb.allen_fact(*z1, *z2, kb.haut());
            f && AllenSet(kb.fact(*f).atom.mask).subset_of(kb.options().cont2_level))
            kb.derive(A(Rel::Cont2, x, y), true, R::Cont2Def, {*cont, *f});
    }
    if (auto f = no(kb, Rel::PlusHaut, *z1, *z2)) kb.derive(A(Rel::Cont1, x, y), false, R::D47, {*f});
    if (auto f = no(kb, Rel::PlusHaut, *z2, *z1)) kb.derive(A(Rel::Cont3, x, y), false, R::Cont3Def, {*f});
    if (auto f = kb.allen_fact(*z1, *z2, kb.haut());
        f && (AllenSet(kb.fact(*f).atom.mask) & kb.options().cont2_level).empty())
        kb.derive(A(Rel::Cont2, x, y), false, R::Cont2Def, {*f});
}

void fire_cont(Kb& kb, FactId id, IndId x, IndId y, bool pos) {
    if (!pos) {
        for (Rel r : {Rel::Cont1, Rel::Cont2, Rel::Cont3}) kb.derive(A(r, x, y), false, R::D47, {id});
        return;
    }
    if (x == y) return;
    auto z1 = make_zone(kb, x, y);
    if (z1) {
        kb.derive(A(Rel::Zonecont, *z1, x, y), true, R::Zone, {id});
        kb.derive(A(Rel::P, *z1, x), true, R::Zone, {id});
    }
    check_cont(kb, x, y);
}

void fire_zonecont(Kb& kb, FactId id, IndId z, IndId x, IndId y, bool pos) {
    if (!pos) return;
    // the maximal zone is unique
    if (auto own = zone_of(kb, x, y); own && *own != z) kb.derive(A(Rel::Eqs, z, *own), true, R::Zone, {id});
    check_cont(kb, x, y);
    check_cont(kb, y, x);
}

void recheck_zone(Kb& kb, IndId z) {
    for (auto [x, y] : zone_owners(kb, z)) {
        check_cont(kb, x, y);
        check_cont(kb, y, x);
    }
}

void fire_contk(Kb& kb, FactId id, Rel r, IndId x, IndId y, bool pos) {
    if (pos) {
        RuleId rule = r == Rel::Cont1 ? R::D47 : r == Rel::Cont2 ? R::Cont2Def : R::Cont3Def;
        kb.derive(A(Rel::Cont, x, y), true, rule, {id});
        auto z1 = make_zone(kb, x, y), z2 = make_zone(kb, y, x);
        if (z1 && z2) {
            if (r == Rel::Cont1) kb.derive(A(Rel::PlusHaut, *z1, *z2), true, R::D47, {id});
            if (r == Rel::Cont3) kb.derive(A(Rel::PlusHaut, *z2, *z1), true, R::Cont3Def, {id});
            if (r == Rel::Cont2) kb.derive_allen(*z1, *z2, kb.haut(), kb.options().cont2_level, R::Cont2Def, {id});
        }
    }
    for (EntityId a : kb.entities_at(x))
        for (EntityId b : kb.entities_at(y)) check_sur(kb, a, b);
}

void check_sur(Kb& kb, EntityId x, EntityId y) {
    if (x == y) return;
    IndId sx = kb.sref(x), sy = kb.sref(y);
    struct Case {
        Rel sur, cat, cont, stab;
        RuleId rule;
    };
    const Case cases[] = {{Rel::Sur1, Rel::Catcomp1, Rel::Cont1, Rel::Stabilise, R::D49},
                          {Rel::Sur2, Rel::Catcomp2, Rel::Cont2, Rel::StabTot, R::D50},
                          {Rel::Sur3, Rel::Catcomp3, Rel::Cont3, Rel::StabTot, R::D51}};
    for (const auto& c : cases) {
        auto f1 = yes(kb, c.cat, x, y), f2 = yes(kb, c.cont, sx, sy), f3 = yes(kb, c.stab, y, x);
        if (f1 && f2 && f3) kb.derive(A(c.sur, x, y), true, c.rule, {*f1, *f2, *f3});
        for (auto f : {no(kb, c.cat, x, y), no(kb, c.cont, sx, sy), no(kb, c.stab, y, x)})
            if (f) kb.derive(A(c.sur, x, y), false, c.rule, {*f});
    }
}

void fire_sur(Kb& kb, FactId id, Rel r, EntityId x, EntityId y, bool pos) {
    if (!pos) return;
    RuleId rule = r == Rel::Sur1 ? R::D49 : r == Rel::Sur2 ? R::D50 : R::D51;
    Rel cat = r == Rel::Sur1 ? Rel::Catcomp1 : r == Rel::Sur2 ? Rel::Catcomp2 : Rel::Catcomp3;
    Rel cont = r == Rel::Sur1 ? Rel::Cont1 : r == Rel::Sur2 ? Rel::Cont2 : Rel::Cont3;
    kb.derive(A(cat, x, y), true, rule, {id});
    kb.derive(A(cont, kb.sref(x), kb.sref(y)), true, rule, {id});
    kb.derive(A(r == Rel::Sur1 ? Rel::Stabilise : Rel::StabTot, y, x), true, rule, {id});
}

void fire_stabilise(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    // this = Stabilise(x, y)
    if (!pos) {
        kb.derive(A(Rel::StabTot, x, y), false, R::StabTotF, {id});
        check_sur(kb, y, x);
        return;
    }
    for (FactId f : with(kb, Rel::Stabilise, true, 0, y)) {
        EntityId z = arg(kb, f, 1);
        if (z != x) kb.derive(A(Rel::Stabilise, x, z), true, R::A46, {id, f});
    }
    for (FactId f : with(kb, Rel::Stabilise, true, 1, x)) {
        EntityId w = arg(kb, f, 0);
        if (w != y) kb.derive(A(Rel::Stabilise, w, y), true, R::A46, {f, id});
    }
    // A48 with x as the part z
    for (FactId f : with(kb, Rel::Part, true, 0, x)) {
        EntityId whole = arg(kb, f, 1);
        if (auto np = no(kb, Rel::Part, y, whole)) kb.derive(A(Rel::Stabilise, whole, y), true, R::A48, {f, *np, id});
    }
    check_sur(kb, y, x);
}

void fire_part_support(Kb& kb, FactId id, EntityId z, EntityId y, bool pos) {
    if (pos) {
        // Part(z,y): Stabilise(z,x) & ~Part(x,y)
        for (FactId f : with(kb, Rel::Stabilise, true, 0, z)) {
            EntityId x = arg(kb, f, 1);
            if (auto np = no(kb, Rel::Part, x, y)) kb.derive(A(Rel::Stabilise, y, x), true, R::A48, {id, *np, f});
        }
    } else {
        // ~Part(x,y) with x = z here
        EntityId x = z;
        for (FactId f : with(kb, Rel::Stabilise, true, 1, x)) {
            EntityId part = arg(kb, f, 0);
            if (auto p = yes(kb, Rel::Part, part, y)) kb.derive(A(Rel::Stabilise, y, x), true, R::A48, {*p, id, f});
        }
    }
}

// ------------------------------------------------------------ containment

void fire_tds(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::Dans, x, y), true, R::DansDef, {id});
    auto cx = kb.class_of(x), cy = kb.class_of(y);
    if (!cx || !cy) return;
    IndId sx = kb.sref(x);
    if (in(cx, {kObj, kMat}) && in(cy, {kObj, kMat, kLoc})) {
        IndId u = kb.sref(kb.interior_of(y));
        if (auto ix = interior_ind(kb, sx)) kb.derive(A(Rel::P, *ix, u), true, R::D52, {id}, "clause 1");
    } else if (in(cx, {kObj, kSp}) && cy == kSp) {
        if (auto ix = interior_ind(kb, sx)) kb.derive(A(Rel::P, *ix, kb.sref(y)), true, R::D52, {id}, "clause 2");
    } else if (cx == kSp && in(cy, {kObj, kMat})) {
        // both disjuncts of clause 3 put x inside int(y)
        IndId u = kb.sref(kb.interior_of(y));
        kb.derive(A(Rel::P, sx, u), true, R::D52, {id}, "clause 3");
    } else if (cx == kLoc && cy == kLoc) {
        // clause 4 has no monotone consequence
    } else {
        kb.derive(A(Rel::TDs, x, y), false, R::D52, {}, "no clause of D52 fits " +
                                                              std::string(class_name(*cx)) + "/" +
                                                              std::string(class_name(*cy)));
    }
}

void fire_pds(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::Dans, x, y), true, R::DansDef, {id});
    auto cx = kb.class_of(x), cy = kb.class_of(y);
    if (!cx || !cy) return;
    IndId sx = kb.sref(x);
    if (in(cx, {kObj, kMat}) && in(cy, {kObj, kMat, kLoc})) {
        IndId u = kb.sref(kb.interior_of(y));
        if (auto ix = interior_ind(kb, sx)) kb.derive(A(Rel::O, *ix, u), true, R::D53, {id}, "clause 1");
    } else if (in(cx, {kObj, kMat}) && cy == kSp) {
        if (auto ix = interior_ind(kb, sx)) kb.derive(A(Rel::O, *ix, kb.sref(y)), true, R::D53, {id}, "clause 2");
    } else {
        kb.derive(A(Rel::PDs, x, y), false, R::D53, {}, "no clause of D53 fits");
    }
}

void fire_dans(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (pos) return;
    for (Rel r : {Rel::TDs, Rel::PDs, Rel::DPt}) kb.derive(A(r, x, y), false, R::DansDef, {id});
}

}  // namespace

void fire_functional(Kb& kb, FactId id) {
    const bool pos = kb.fact(id).positive;
    Atom a = kb.canonical(kb.fact(id).atom);
    uint32_t x = a.a[0], y = a.a[1], z = a.a[2], w = a.a[3];
    switch (a.rel) {
    case Rel::DirExt: fire_dir_ext(kb, id, x, y, z, w, pos); break;
    case Rel::Exts:
        if (pos) fire_exts(kb, id, x, y, z, w);
        break;
    case Rel::CanUse:
    case Rel::InUse:
        if (pos) refire_dir_ext(kb, x);
        break;
    case Rel::OrientGen:
        if (pos) refire_dir_ext(kb, x);
        break;
    case Rel::InSp: fire_insp(kb, id, x, y, z, pos); break;
    case Rel::DevantI: fire_devant_i(kb, id, x, y, z, pos); break;
    case Rel::DevantD:
    case Rel::DerriereI:
    case Rel::DerriereD:
        if (pos) {
            kb.derive(A(Rel::InSp, x, y, z), true, a.rel == Rel::DevantD ? R::D46 : a.rel == Rel::DerriereI ? R::DerI : R::DerD,
                      {id});
            if (a.rel == Rel::DerriereI) kb.derive(A(Rel::OrientArriere, z, y), true, R::DerI, {id});
        }
        break;
    case Rel::Speaker:
        if (pos)
            for (FactId f : with(kb, Rel::DevantI, true, 1, x)) kb.enqueue(f);
        break;
    case Rel::OrientAvant:
    case Rel::OrientArriere:
    case Rel::OrientAvant1:
    case Rel::OrientAvant2:
    case Rel::OrientAvant3: fire_avant(kb, id, a.rel, x, y, pos); break;
    case Rel::Cont: fire_cont(kb, id, x, y, pos); break;
    case Rel::Zonecont: fire_zonecont(kb, id, x, y, z, pos); break;
    case Rel::PlusHaut:
        recheck_zone(kb, x);
        recheck_zone(kb, y);
        break;
    case Rel::Allen:
        if (z == kb.dirs().canon(kb.haut())) {
            recheck_zone(kb, x);
            recheck_zone(kb, y);
        }
        break;
    case Rel::Cont1:
    case Rel::Cont2:
    case Rel::Cont3: fire_contk(kb, id, a.rel, x, y, pos); break;
    case Rel::Catcomp1:
    case Rel::Catcomp2:
    case Rel::Catcomp3: check_sur(kb, x, y); break;
    case Rel::StabTot:
        if (pos) kb.derive(A(Rel::Stabilise, x, y), true, R::StabTotF, {id});
        check_sur(kb, y, x);
        break;
    case Rel::Stabilise: fire_stabilise(kb, id, x, y, pos); break;
    case Rel::Part: fire_part_support(kb, id, x, y, pos); break;
    case Rel::Sur1:
    case Rel::Sur2:
    case Rel::Sur3: fire_sur(kb, id, a.rel, x, y, pos); break;
    case Rel::TDs: fire_tds(kb, id, x, y, pos); break;
    case Rel::PDs: fire_pds(kb, id, x, y, pos); break;
    case Rel::DPt:
        if (pos) kb.derive(A(Rel::Dans, x, y), true, R::DansDef, {id});
        break;
    case Rel::Dans: fire_dans(kb, id, x, y, pos); break;
    default: break;
    }
}

}  // namespace topos
