// Ontology, plural lattice, collections, quantities and part-whole kinds.
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

EntityId earg(const Kb& kb, FactId f, int i) { return kb.canon_entity(kb.fact(f).atom.a[size_t(i)]); }

const Rel kClasses[] = {Rel::Obj, Rel::Mat, Rel::Subst, Rel::Loc, Rel::SpPort};

void fire_class(Kb& kb, FactId id, Rel cls, EntityId x, bool pos) {
    if (!pos) return;
    // A43 exclusive classes; a violation shows up as a clash with the other class fact
    for (Rel other : kClasses)
        if (other != cls) kb.derive(A(other, x), false, R::A43, {id});
    if (auto f = no(kb, Rel::At, x)) {
        kb.record_conflict(id, *f, "A43", kb.ent_str(x) + " has class " + std::string(rel_name(cls)) +
                                              " but is not atomic");
    }
}

void fire_leq(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::P, kb.sref(x), kb.sref(y)), true, R::A34, {id});
    for (FactId f : with(kb, Rel::Leq, true, 0, y)) {
        EntityId z = earg(kb, f, 1);
        if (z != x) kb.derive(A(Rel::Leq, x, z), true, R::A30, {id, f});
    }
    for (FactId f : with(kb, Rel::Leq, true, 1, x)) {
        EntityId w = earg(kb, f, 0);
        if (w != y) kb.derive(A(Rel::Leq, w, y), true, R::A30, {f, id});
    }
    if (x == y) return;
    if (auto f = yes(kb, Rel::Leq, y, x)) kb.derive(A(Rel::Same, x, y), true, R::A31, {id, *f});
    auto at_x = yes(kb, Rel::At, x);
    auto nat_x = no(kb, Rel::At, x);
    auto nat_y = no(kb, Rel::At, y);
    if (auto ne = no(kb, Rel::Same, x, y); ne || kb.entity(x).atoms != kb.entity(y).atoms) {
        std::vector<FactId> prem{id};
        if (ne) prem.push_back(*ne);
        if (at_x && nat_y) {
            prem.push_back(*at_x);
            prem.push_back(*nat_y);
            kb.derive_v(A(Rel::Member, x, y), true, R::MemberDer, prem);
        } else if (nat_x && nat_y) {
            prem.push_back(*nat_x);
            kb.derive_v(A(Rel::Subcoll, x, y), true, R::SubcollDer, prem);
        }
    }
}

void fire_iscoll(Kb& kb, FactId id, EntityId x, EntityId y) {
    kb.derive(A(Rel::Eqs, kb.sref(x), kb.sref(y)), true, R::A36, {id});
    kb.derive(A(Rel::Coll, x), true, R::D35, {id});
    kb.derive(A(Rel::At, x), true, R::A35, {id});
    kb.derive(A(Rel::At, y), false, R::A35, {id});
}

void fire_q(Kb& kb, FactId id, EntityId x, EntityId s) {
    kb.derive(A(Rel::Mat, x), true, R::A38, {id});
    kb.derive(A(Rel::Subst, s), true, R::A38, {id});
    kb.derive(A(Rel::P, kb.sref(x), kb.sref(s)), true, R::A38, {id});
    // Q(z,x) & Part(z,y) -> Subst-Wh(x,y)
    for (FactId f : with(kb, Rel::Part, true, 0, x))
        kb.derive(A(Rel::SubstWh, s, earg(kb, f, 1)), true, R::SubstWhDer, {id, f});
}

void fire_same(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (!pos) {
        kb.derive(A(Rel::Same, y, x), false, R::SameMerge, {id});
        return;
    }
    if (x == y) return;
    kb.derive(A(Rel::Eqs, kb.sref(x), kb.sref(y)), true, R::SameMerge, {id});
    kb.merge_entities(x, y);
}

void fire_kind(Kb& kb, FactId id, MeronymyKind k, EntityId x, EntityId y, bool pos) {
    if (!pos) return;
    kb.derive(A(Rel::Part, x, y), true, R::D36, {id});
    if (k == MeronymyKind::Piece) kb.derive(A(Rel::Con, kb.sref(x)), true, R::PieceCon, {id});
    const auto& table = kb.options().mero_table;
    for (int i = 0; i < kMeronymyKinds; ++i) {
        auto k2 = MeronymyKind(i);
        if (auto k3 = table.compose(k, k2))
            for (FactId f : with(kb, kind_rel(k2), true, 0, y)) {
                EntityId z = earg(kb, f, 1);
                if (z != x) kb.derive(A(kind_rel(*k3), x, z), true, R::MeroComp, {id, f});
            }
        if (auto k3 = table.compose(k2, k))
            for (FactId f : with(kb, kind_rel(k2), true, 1, x)) {
                EntityId w = earg(kb, f, 0);
                if (w != y) kb.derive(A(kind_rel(*k3), w, y), true, R::MeroComp, {f, id});
            }
    }
}

void fire_part(Kb& kb, FactId id, EntityId x, EntityId y, bool pos) {
    if (!pos) {
        for (int i = 0; i < kMeronymyKinds; ++i) kb.derive(A(kind_rel(MeronymyKind(i)), x, y), false, R::D36N, {id});
        return;
    }
    kb.derive(A(Rel::P, kb.sref(x), kb.sref(y)), true, R::PartP, {id});
    for (FactId f : with(kb, Rel::Q, true, 0, x))
        kb.derive(A(Rel::SubstWh, earg(kb, f, 1), y), true, R::SubstWhDer, {f, id});
    // Fn10: a part is not inside its whole
    auto cx = kb.class_of(x), cy = kb.class_of(y);
    if (cx && cy && (*cx == EntityClass::Obj || *cx == EntityClass::Mat) &&
        (*cy == EntityClass::Obj || *cy == EntityClass::Mat || *cy == EntityClass::Loc))
        kb.derive(A(Rel::TDs, x, y), false, R::Fn10, {id});
}

void fire_at(Kb& kb, FactId id, EntityId x, bool pos) {
    if (!pos) kb.derive(A(Rel::Coll, x), true, R::D35, {id});
}

void fire_coll(Kb& kb, FactId id, EntityId x, bool pos) {
    // ~Coll(x) -> At(x) and no Is-coll
    if (pos) return;
    kb.derive(A(Rel::At, x), true, R::D35, {id});
}

// Catcomp1/2/3 from declared horizontal and vertical size levels.
void catcomp_pair(Kb& kb, EntityId x, EntityId y) {
    const auto& ax = kb.entity(x).attrs;
    const auto& ay = kb.entity(y).attrs;
    auto lv = [](SizeLevel s) { return int(s); };
    bool h = ax.hsize != SizeLevel::Unknown && ay.hsize != SizeLevel::Unknown;
    bool v = ax.vsize != SizeLevel::Unknown && ay.vsize != SizeLevel::Unknown;
    std::string note = "sizes " + kb.ent_str(x) + " h=" + std::string(size_name(ax.hsize)) + " v=" +
                       std::string(size_name(ax.vsize)) + ", " + kb.ent_str(y) + " h=" +
                       std::string(size_name(ay.hsize)) + " v=" + std::string(size_name(ay.vsize));
    if (h) kb.derive(A(Rel::Catcomp1, x, y), lv(ax.hsize) <= lv(ay.hsize) + 1, R::CatcompDesc, {}, note);
    if (h && v)
        kb.derive(A(Rel::Catcomp2, x, y), lv(ax.hsize) <= lv(ay.hsize) + 1 && lv(ax.vsize) <= lv(ay.vsize) + 1,
                  R::CatcompDesc, {}, note);
    if (h && ax.vsize != SizeLevel::Unknown)
        kb.derive(A(Rel::Catcomp3, x, y), lv(ax.hsize) <= lv(ay.hsize) && lv(ax.vsize) <= lv(SizeLevel::Small),
                  R::CatcompDesc, {}, note);
}

}  // namespace

void entity_axioms(Kb& kb, EntityId e) {
    e = kb.canon_entity(e);
    const auto& a = kb.entity(e).attrs;
    if (a.hsize == SizeLevel::Unknown && a.vsize == SizeLevel::Unknown) return;
    for (EntityId o : kb.entity_ids()) {
        if (o == e) continue;
        const auto& b = kb.entity(o).attrs;
        if (b.hsize == SizeLevel::Unknown && b.vsize == SizeLevel::Unknown) continue;
        catcomp_pair(kb, e, o);
        catcomp_pair(kb, o, e);
    }
}

void fire_kb(Kb& kb, FactId id) {
    const bool pos = kb.fact(id).positive;
    Atom a = kb.canonical(kb.fact(id).atom);
    const auto& sig = rel_info(a.rel).sig;
    if (sig.empty() || sig[0] != Sort::Entity) return;
    EntityId x = a.a[0], y = a.a[1];
    if (is_entity_class(a.rel)) return fire_class(kb, id, a.rel, x, pos);
    if (auto k = kind_of(a.rel)) return fire_kind(kb, id, *k, x, y, pos);
    switch (a.rel) {
    case Rel::At: fire_at(kb, id, x, pos); break;
    case Rel::Coll: fire_coll(kb, id, x, pos); break;
    case Rel::Leq: fire_leq(kb, id, x, y, pos); break;
    case Rel::IsColl:
        if (pos) fire_iscoll(kb, id, x, y);
        break;
    case Rel::Q:
        if (pos) fire_q(kb, id, x, y);
        break;
    case Rel::Same: fire_same(kb, id, x, y, pos); break;
    case Rel::Part: fire_part(kb, id, x, y, pos); break;
    default: break;
    }
}

}  // namespace topos
