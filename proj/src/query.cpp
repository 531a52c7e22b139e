#include "topos/query.hpp"

#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

bool obj_mat(std::optional<EntityClass> c) { return c && (*c == EntityClass::Obj || *c == EntityClass::Mat); }

template <class F>
void quietly(F&& f) {
    try {
        f();
    } catch (const KbError&) {
    } catch (const TermError&) {
    }
}

void prepare_containment(Kb& kb, EntityId x, EntityId y) {
    auto cx = kb.class_of(x), cy = kb.class_of(y);
    if (cy && (*cy == EntityClass::Obj || *cy == EntityClass::Mat || *cy == EntityClass::Loc))
        quietly([&] { kb.interior_of(y); });
    if (cx && (*cx == EntityClass::Obj || *cx == EntityClass::Mat || *cx == EntityClass::SpPort))
        quietly([&] { kb.construct_interior(kb.sref(x)); });
}

std::optional<EntityId> interior_ent(const Kb& kb, EntityId x) {
    x = kb.canon_entity(x);
    for (auto [owner, t] : kb.entities().interior)
        if (kb.canon_entity(owner) == x) return kb.canon_entity(t);
    return std::nullopt;
}

std::optional<EntityId> rest_ent(const Kb& kb, EntityId whole, EntityId part) {
    for (auto [key, r] : kb.entities().rest)
        if (kb.canon_entity(key.first) == kb.canon_entity(whole) && kb.canon_entity(key.second) == kb.canon_entity(part))
            return kb.canon_entity(r);
    return std::nullopt;
}

struct Eval {
    Kb& kb;
    Verdict v;
    AllenSet want = AllenSet::all();

    Status st(const Atom& a) const { return kb.status(a); }
    std::string show(const Atom& a) const { return kb.atom_str(a); }
    std::string with_status(const Atom& a) const { return show(a) + " is " + std::string(status_name(st(a))); }

    void refute_closed(const std::string& failed, const std::string& why) {
        v.status = Status::Refuted;
        v.failed = failed;
        v.note = "closed-world: " + why;
    }
};

std::string tds_key(Kb& kb, EntityId x, EntityId y, bool partial, std::optional<Atom>& key) {
    auto cx = kb.class_of(x), cy = kb.class_of(y);
    if (!cx || !cy) return "classes unknown";
    auto sx = kb.sref_of(x);
    std::optional<IndId> ix;
    if (sx) ix = interior_term(kb, *sx);
    Rel r = partial ? Rel::O : Rel::P;
    std::string tag = partial ? "PDs" : "TDs";
    if (obj_mat(cx) && (obj_mat(cy) || *cy == EntityClass::Loc)) {
        if (auto u = interior_ent(kb, y); u && ix) key = A(r, *ix, *kb.sref_of(*u));
        return tag + " clause 1";
    }
    if (!partial && (*cx == EntityClass::Obj || *cx == EntityClass::SpPort) && *cy == EntityClass::SpPort) {
        if (ix) key = A(r, *ix, kb.sref(y));
        return tag + " clause 2";
    }
    if (partial && obj_mat(cx) && *cy == EntityClass::SpPort) {
        if (ix) key = A(r, *ix, kb.sref(y));
        return tag + " clause 2";
    }
    if (!partial && *cx == EntityClass::SpPort && obj_mat(cy)) {
        if (auto u = interior_ent(kb, y)) key = A(Rel::Piece, x, *u);
        return tag + " clause 3";
    }
    if (!partial && *cx == EntityClass::Loc && *cy == EntityClass::Loc) return tag + " clause 4 (enclave)";
    return "no clause";
}

void eval_tds(Eval& e, EntityId x, EntityId y, bool partial) {
    std::optional<Atom> key;
    std::string tag = tds_key(e.kb, x, y, partial, key);
    e.v.case_tag = tag;
    if (e.v.status != Status::Unknown) return;
    if (!key) {
        e.v.failed = tag == "no clause" ? "class conditions" : "interior terms not available";
        return;
    }
    e.v.failed = e.with_status(*key);
    if (e.st(*key) == Status::Refuted) {
        e.v.status = Status::Refuted;
        e.v.note = "the only applicable clause fails";
    }
}

// D54 read over the closed domain.
void eval_dpt(Eval& e, EntityId x, EntityId y) {
    Kb& kb = e.kb;
    bool objs = obj_mat(kb.class_of(x)) && obj_mat(kb.class_of(y));
    if (e.v.status == Status::Entailed) {
        e.v.case_tag = "DPt";
        return;
    }
    if (e.v.status == Status::Refuted) return;
    e.v.case_tag = "DPt";
    auto kind = yes(kb, Rel::Component, x, y) ? yes(kb, Rel::Component, x, y) : yes(kb, Rel::Piece, x, y);
    if (yes(kb, Rel::Part, x, y) && objs && kind) {
        auto z = rest_ent(kb, y, x);
        std::string rest = z ? kb.ent_str(*z) : "rest(" + kb.ent_str(y) + ", " + kb.ent_str(x) + ")";
        std::string failed = "TDs(" + kb.ent_str(x) + ", " + rest + ")";
        if (z) failed = e.with_status(A(Rel::TDs, x, *z));
        e.refute_closed(failed, "contrast principle: " + kb.ent_str(x) + " is not inside " + rest);
        return;
    }
    auto rev = yes(kb, Rel::Component, y, x) ? yes(kb, Rel::Component, y, x) : yes(kb, Rel::Piece, y, x);
    if (rev && objs) {
        auto z = rest_ent(kb, x, y);
        std::string rest = z ? kb.ent_str(*z) : "rest(" + kb.ent_str(x) + ", " + kb.ent_str(y) + ")";
        e.refute_closed(z ? e.with_status(A(Rel::TDs, *z, y)) : "TDs(" + rest + ", " + kb.ent_str(y) + ")",
                        "contrast principle: " + rest + " is not inside " + kb.ent_str(y));
        return;
    }
    if (yes(kb, Rel::Part, x, y)) {
        e.v.failed = "contrast guard undecided";
        return;
    }
    e.refute_closed(e.with_status(A(Rel::Part, x, y)), "no part-whole relation between the two");
}

// D48 as a least fixpoint: whatever saturation did not derive is false.
std::string stab_tot_failure(Kb& kb, EntityId y, EntityId x) {
    if (!yes(kb, Rel::Stabilise, y, x)) return kb.atom_str(A(Rel::Stabilise, y, x)) + " not entailed";
    auto sx = kb.sref_of(x), sy = kb.sref_of(y);
    if (!sx || !sy) return "missing spatial referents";
    for (FactId g : with(kb, Rel::Stabilise, true, 1, x)) {
        EntityId z = kb.canon_entity(kb.fact(g).atom.a[0]);
        if (z == kb.canon_entity(y)) continue;
        auto sz = kb.sref_of(z);
        if (!sz || !yes(kb, Rel::Cont, *sz, *sx) || yes(kb, Rel::O, *sz, *sy)) continue;
        if (!yes(kb, Rel::StabTot, y, z))
            return kb.atom_str(A(Rel::StabTot, y, z)) + " fails: " + kb.ent_str(z) + " supports " + kb.ent_str(x) +
                   " without being totally stabilised by " + kb.ent_str(y);
    }
    return "no total stabilisation derived";
}

void eval_stab_tot(Eval& e, EntityId y, EntityId x) {
    e.v.case_tag = "Stab_tot";
    if (e.v.status != Status::Unknown) return;
    e.refute_closed(stab_tot_failure(e.kb, y, x), "least fixpoint over the stabilisation graph");
}

void eval_sur(Eval& e, Rel r, EntityId x, EntityId y) {
    Kb& kb = e.kb;
    e.v.case_tag = std::string(rel_name(r));
    if (e.v.status == Status::Entailed) return;
    Rel cat = r == Rel::Sur1 ? Rel::Catcomp1 : r == Rel::Sur2 ? Rel::Catcomp2 : Rel::Catcomp3;
    Rel cont = r == Rel::Sur1 ? Rel::Cont1 : r == Rel::Sur2 ? Rel::Cont2 : Rel::Cont3;
    Rel stab = r == Rel::Sur1 ? Rel::Stabilise : Rel::StabTot;
    std::vector<Atom> conj{A(cat, x, y), A(cont, kb.sref(x), kb.sref(y)), A(stab, y, x)};
    for (const Atom& c : conj)
        if (e.st(c) == Status::Refuted) {
            e.v.failed = e.with_status(c);
            return;
        }
    if (stab == Rel::StabTot && e.st(conj[2]) == Status::Unknown) {
        e.refute_closed(e.show(conj[2]) + ": " + stab_tot_failure(kb, y, x),
                        "total stabilisation read as a least fixpoint");
        return;
    }
    for (const Atom& c : conj)
        if (e.st(c) != Status::Entailed) {
            e.v.failed = e.with_status(c);
            return;
        }
}

void eval_dans(Eval& e, EntityId x, EntityId y) {
    Kb& kb = e.kb;
    for (Rel r : {Rel::TDs, Rel::PDs, Rel::DPt})
        if (yes(kb, r, x, y)) {
            e.v.case_tag = std::string(rel_name(r));
            return;
        }
    if (e.v.status != Status::Unknown) return;
    // each disjunct through its own evaluator, so clause-level refutations count
    auto sub = [&](Rel r) {
        Eval d{kb, {}};
        d.v.status = kb.status(A(r, x, y));
        if (r == Rel::DPt) eval_dpt(d, x, y);
        else eval_tds(d, x, y, r == Rel::PDs);
        return d.v;
    };
    Verdict tds = sub(Rel::TDs), pds = sub(Rel::PDs), dpt = sub(Rel::DPt);
    auto part = [&](Rel r, const Verdict& v) {
        return std::string(rel_name(r)) + " " + std::string(status_name(v.status)) +
               (v.failed.empty() ? "" : " (" + v.failed + ")");
    };
    std::string failed = part(Rel::TDs, tds) + "; " + part(Rel::PDs, pds) + "; " + part(Rel::DPt, dpt);
    e.v.failed = failed;
    if (tds.status == Status::Refuted && pds.status == Status::Refuted && dpt.status == Status::Refuted) {
        std::string why = "no disjunct of dans holds";
        if (!dpt.note.empty()) why += "; DPt " + dpt.note;
        e.refute_closed(failed, why);
    }
}

void eval_orient(Eval& e, Rel r, DirId d, EntityId x) {
    Kb& kb = e.kb;
    if (r == Rel::OrientAvant) {
        for (Rel k : {Rel::OrientAvant1, Rel::OrientAvant2, Rel::OrientAvant3})
            if (yes(kb, k, d, x)) {
                e.v.case_tag = std::string(rel_name(k));
                return;
            }
    }
    if (e.v.status == Status::Unknown && (r == Rel::OrientHaut || r == Rel::OrientBas) && !yes(kb, Rel::CanUse, x))
        e.v.failed = e.with_status(A(Rel::CanUse, x));
}

void eval_devant(Eval& e, Rel r, EntityId y, EntityId x, DirId d) {
    Kb& kb = e.kb;
    e.v.case_tag = std::string(rel_name(r));
    e.v.witness.push_back("direction " + kb.dir_str(d));
    if (r == Rel::DevantD || r == Rel::DerriereD) {
        DirId want = r == Rel::DevantD ? kb.dirs().canon(kb.opposite(d)) : kb.dirs().canon(d);
        bool speaker = false;
        for (FactId f : with(kb, Rel::DevantI, true, 0, x)) {
            EntityId s = kb.canon_entity(kb.fact(f).atom.a[1]);
            if (!yes(kb, Rel::Speaker, s)) continue;
            speaker = true;
            if (kb.dirs().canon(kb.fact(f).atom.a[2]) == want) e.v.witness.push_back("speaker " + kb.ent_str(s));
        }
        if (e.v.status == Status::Unknown) {
            if (kb.facts_of(Rel::Speaker, true).empty()) e.v.failed = "no Speaker declared";
            else if (!speaker) e.v.failed = "no speaker faces " + kb.ent_str(x);
            else e.v.failed = e.with_status(A(Rel::InSp, y, x, d));
        }
        return;
    }
    if (e.v.status != Status::Unknown) return;
    Atom front = A(r == Rel::DevantI ? Rel::OrientAvant : Rel::OrientArriere, d, x);
    Atom sp = A(Rel::InSp, y, x, d);
    e.v.failed = e.st(front) != Status::Entailed ? e.with_status(front) : e.with_status(sp);
}

}  // namespace

// A29 and Fn4 only fire on pairs that already carry an Allen fact; a query
// on a bare pair instantiates them here.
void eval_allen(Eval& e, IndId x, IndId y, DirId d) {
    if (e.v.status != Status::Unknown) return;
    Kb& kb = e.kb;
    AllenSet m = AllenSet::all();
    std::vector<FactId> prem;
    RuleId rule = R::A29;
    if (auto c = yes(kb, Rel::C, x, y)) {
        m = m & kConnectedAllen;
        prem.push_back(*c);
    }
    if (auto p = yes(kb, Rel::P, x, y)) {
        m = m & kPartAllen;
        prem.push_back(*p);
        rule = R::Fn4;
    } else if (auto q = yes(kb, Rel::P, y, x)) {
        m = m & converse(kPartAllen);
        prem.push_back(*q);
        rule = R::Fn4;
    }
    if (prem.empty()) return;
    kb.derive_allen(x, y, d, m, rule, prem);
    Atom q = make_atom(Rel::Allen, x, y, d);
    q.mask = e.want.bits();
    if (auto f = kb.lookup(q, true)) {
        e.v.status = Status::Entailed;
        e.v.proof = kb.handle(*f);
    } else if (auto g = kb.lookup(q, false)) {
        e.v.status = Status::Refuted;
        e.v.proof = kb.handle(*g);
    }
    if (e.v.proof.valid()) e.v.case_tag = std::string(rule_info(rule).label);
}

void prepare_query(Kb& kb, const Literal& lit) {
    Atom a = kb.to_atom(lit);
    uint32_t x = a.a[0], y = a.a[1];
    switch (a.rel) {
    case Rel::C:
        if (x == y) kb.derive(a, true, R::A1, {});
        break;
    case Rel::P:
        if (x == y) kb.derive(a, true, R::PRefl, {});
        break;
    case Rel::O:
        if (x == y) kb.derive(A(Rel::P, x, x), true, R::PRefl, {});
        break;
    case Rel::Eqs:
        if (x == y) kb.derive(A(Rel::P, x, x), true, R::PRefl, {});
        break;
    case Rel::DirEq:
        if (kb.dirs().canon(x) == kb.dirs().canon(y)) kb.derive(a, true, R::DirRefl, {});
        break;
    case Rel::Closer:
    case Rel::Equidist:
        for (int i = 0; i < 3; ++i) kb.touch_distance(a.a[size_t(i)]);
        break;
    case Rel::TDs:
    case Rel::PDs:
    case Rel::DPt:
    case Rel::Dans: prepare_containment(kb, x, y); break;
    default: break;
    }
}

Verdict evaluate(Kb& kb, const Literal& lit) {
    Atom a = kb.to_atom(lit);
    Eval e{kb, {}};
    // evaluate the positive atom, flip at the end
    if (auto f = kb.lookup(a, true)) {
        e.v.status = Status::Entailed;
        e.v.proof = kb.handle(*f);
    } else if (auto g = kb.lookup(a, false)) {
        e.v.status = Status::Refuted;
        e.v.proof = kb.handle(*g);
    }
    if (e.v.proof.valid()) {
        const Fact& f = kb.fact(e.v.proof.fact);
        e.v.case_tag = std::string(rule_info(f.rule).label);
        if (f.rule == R::Asserted) e.v.case_tag = "asserted";
    }
    uint32_t x = a.a[0], y = a.a[1], z = a.a[2];
    switch (a.rel) {
    case Rel::TDs: eval_tds(e, x, y, false); break;
    case Rel::PDs: eval_tds(e, x, y, true); break;
    case Rel::DPt: eval_dpt(e, x, y); break;
    case Rel::Dans: eval_dans(e, x, y); break;
    case Rel::Allen:
        e.want = AllenSet(a.mask);
        eval_allen(e, x, y, z);
        break;
    case Rel::StabTot: eval_stab_tot(e, x, y); break;
    case Rel::Sur1:
    case Rel::Sur2:
    case Rel::Sur3: eval_sur(e, a.rel, x, y); break;
    case Rel::OrientAvant:
    case Rel::OrientHaut:
    case Rel::OrientBas: eval_orient(e, a.rel, x, y); break;
    case Rel::DevantI:
    case Rel::DevantD:
    case Rel::DerriereI:
    case Rel::DerriereD: eval_devant(e, a.rel, x, y, z); break;
    default: break;
    }
    if (!lit.positive) {
        if (e.v.status == Status::Entailed) e.v.status = Status::Refuted;
        else if (e.v.status == Status::Refuted) e.v.status = Status::Entailed;
    }
    return e.v;
}

}  // namespace topos
