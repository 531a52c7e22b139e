// Closure rules: universally quantified definitions read over the current domain,
// and the constructor axioms A50/A51 that need whole-store views.
#include <map>
#include <set>

#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

constexpr auto kObj = EntityClass::Obj;
constexpr auto kMat = EntityClass::Mat;
constexpr auto kLoc = EntityClass::Loc;
constexpr auto kSp = EntityClass::SpPort;

bool in(std::optional<EntityClass> c, std::initializer_list<EntityClass> set) {
    return c && std::find(set.begin(), set.end(), *c) != set.end();
}

std::optional<EntityId> interior_ent(const Kb& kb, EntityId x) {
    x = kb.canon_entity(x);
    for (auto [owner, t] : kb.entities().interior)
        if (kb.canon_entity(owner) == x) return kb.canon_entity(t);
    return std::nullopt;
}

std::optional<EntityId> rest_ent(const Kb& kb, EntityId whole, EntityId part) {
    whole = kb.canon_entity(whole);
    part = kb.canon_entity(part);
    for (auto [key, r] : kb.entities().rest)
        if (kb.canon_entity(key.first) == whole && kb.canon_entity(key.second) == part) return kb.canon_entity(r);
    return std::nullopt;
}

std::optional<EntityId> make_rest(Kb& kb, EntityId whole, EntityId part) {
    if (auto r = rest_ent(kb, whole, part)) return r;
    try {
        return kb.rest_of(whole, part);
    } catch (const KbError&) {
        return std::nullopt;
    } catch (const TermError&) {
        return std::nullopt;
    }
}

// ------------------------------------------------------------- D1 / A3

void connection_closure(Kb& kb) {
    auto inds = kb.individuals();
    size_t n = inds.size();
    if (n < 2 || n > 400) return;
    // c[i][j]: C(inds[j], inds[i]) entailed; complete[i]: every C(z, inds[i]) decided
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n));
    std::vector<bool> complete(n, true);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                c[i][j] = true;
                continue;
            }
            Status s = kb.status(A(Rel::C, inds[j], inds[i]));
            c[i][j] = s == Status::Entailed;
            if (s == Status::Unknown) complete[i] = false;
        }
    for (size_t i = 0; i < n; ++i) {
        if (!complete[i]) continue;
        for (size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            bool sub = true;
            for (size_t j = 0; j < n && sub; ++j)
                if (c[i][j] && !c[k][j]) sub = false;
            if (!sub) continue;
            IndId x = inds[i], y = inds[k];
            if (kb.lookup(A(Rel::P, x, y), true)) continue;
            kb.derive(A(Rel::P, x, y), true, R::D1C, {}, "every individual connected to " + kb.ind_str(x) +
                                                              " is connected to " + kb.ind_str(y));
            if (complete[k] && c[i] == c[k]) kb.derive(A(Rel::Eqs, x, y), true, R::A3, {});
        }
    }
}

// ------------------------------------------------------------------ D31

void sum_closure(Kb& kb) {
    auto dirs = kb.directions();
    for (FactId f : kb.facts_of(Rel::InMed, true)) {
        Atom a = kb.canonical(kb.fact(f).atom);
        DirId d3 = a.a[0], d1 = a.a[1], d2 = a.a[2];
        if (kb.lookup(A(Rel::InSum, d3, d1, d2), true) || kb.lookup(A(Rel::InSum, d3, d1, d2), false)) continue;
        std::vector<FactId> prem{f};
        bool ok = true;
        for (DirId d4 : dirs) {
            if (d4 == d3) continue;
            if (auto nm = no(kb, Rel::InMed, d4, d1, d2)) {
                prem.push_back(*nm);
                continue;
            }
            if (auto nk = no(kb, Rel::Kd, d1, d4, d3)) {
                prem.push_back(*nk);
                continue;
            }
            ok = false;
            break;
        }
        if (ok) kb.derive_v(A(Rel::InSum, d3, d1, d2), true, R::D31, prem, "medians closed over declared directions");
    }
}

// ------------------------------------------------------------- D41/D42

void front_by_use(Kb& kb) {
    for (FactId f : kb.facts_of(Rel::DirExt, true)) {
        Atom a = kb.canonical(kb.fact(f).atom);
        EntityId x = a.a[2];
        DirId d = a.a[3];
        auto cu = yes(kb, Rel::CanUse, x);
        if (!cu) continue;
        auto users = with(kb, Rel::Utilise, true, 0, x);
        if (users.empty()) continue;
        for (int sign = 0; sign < 2; ++sign) {
            DirId want = sign == 0 ? d : kb.dirs().canon(kb.opposite(d));
            std::vector<FactId> prem{f, *cu};
            bool all = true;
            for (FactId u : users) {
                EntityId user = kb.canon_entity(kb.fact(u).atom.a[1]);
                auto fronts = with(kb, Rel::OrientAvant1, true, 1, user);
                bool ok = !fronts.empty();
                for (FactId g : fronts)
                    if (kb.dirs().canon(kb.fact(g).atom.a[0]) != want) ok = false;
                if (!ok) {
                    all = false;
                    break;
                }
                prem.push_back(u);
                prem.insert(prem.end(), fronts.begin(), fronts.end());
            }
            if (all)
                kb.derive_v(A(sign == 0 ? Rel::OrientAvant2 : Rel::OrientAvant3, d, x), true,
                            sign == 0 ? R::D41 : R::D42, prem);
        }
    }
}

// ------------------------------------------------------------------ D48

void total_support(Kb& kb) {
    auto ents = kb.entity_ids();
    bool grew = true;
    while (grew) {
        grew = false;
        for (FactId f : kb.facts_of(Rel::Stabilise, true)) {
            Atom a = kb.canonical(kb.fact(f).atom);
            EntityId y = a.a[0], x = a.a[1];
            if (kb.lookup(A(Rel::StabTot, y, x), true) || kb.lookup(A(Rel::StabTot, y, x), false)) continue;
            auto sy = kb.sref_of(y), sx = kb.sref_of(x);
            if (!sy || !sx) continue;
            std::vector<FactId> prem{f};
            bool ok = true;
            for (FactId g : with(kb, Rel::Stabilise, true, 1, x)) {
                EntityId z = kb.canon_entity(kb.fact(g).atom.a[0]);
                if (z == y) continue;
                auto sz = kb.sref_of(z);
                if (!sz) continue;
                if (!yes(kb, Rel::Cont, *sz, *sx)) continue;
                if (yes(kb, Rel::O, *sz, *sy)) continue;
                auto t = yes(kb, Rel::StabTot, y, z);
                if (!t) {
                    ok = false;
                    break;
                }
                prem.push_back(*t);
            }
            if (ok && kb.derive_v(A(Rel::StabTot, y, x), true, R::D48, prem,
                                  "every contacting stabiliser of " + kb.ent_str(x) + " is totally stabilised") != kNone)
                grew = true;
        }
    }
    (void)ents;
}

// --------------------------------------------------------- interiors

void interior_axioms(Kb& kb) {
    auto owners = kb.entities().interior;
    for (auto [xo, to] : owners) {
        EntityId x = kb.canon_entity(xo), t = kb.canon_entity(to);
        IndId st = kb.sref(t), sx = kb.sref(x);
        // A51
        if (auto ix = interior_term(kb, sx))
            for (auto [yo, uo] : owners) {
                EntityId y = kb.canon_entity(yo), u = kb.canon_entity(uo);
                if (y == x) continue;
                IndId su = kb.sref(u), sy = kb.sref(y);
                if (auto p = yes(kb, Rel::P, *ix, su)) {
                    if (auto s = try_make([&] { return kb.construct_sum({su, sy}); }))
                        kb.derive(A(Rel::P, st, *s), true, R::A51, {*p});
                }
            }
        // A50
        for (FactId f : with(kb, Rel::Part, true, 0, x)) {
            EntityId y = kb.canon_entity(kb.fact(f).atom.a[1]);
            auto u = interior_ent(kb, y);
            auto r = rest_ent(kb, y, x);
            if (!u || !r) continue;
            IndId su = kb.sref(*u), sr = kb.sref(*r);
            if (auto s = try_make([&] { return kb.construct_sum({su, sr}); }))
                kb.derive(A(Rel::P, st, *s), true, R::A50, {f});
        }
        // separation of lieux from the interiors of other entities
        if (!kb.options().lieu_separation) continue;
        auto cx = kb.class_of(x);
        if (!cx || *cx == kLoc) continue;
        for (EntityId l : kb.entity_ids()) {
            if (l == x || kb.class_of(l) != kLoc) continue;
            if (yes(kb, Rel::Part, x, l) || yes(kb, Rel::Part, l, x)) continue;
            kb.derive(A(Rel::O, st, kb.sref(l)), false, R::LieuSep, {},
                      kb.ent_str(t) + " is kept apart from the lieu " + kb.ent_str(l));
        }
    }
}

// ------------------------------------------------------ D52-D54 backward

std::optional<IndId> find_inter(const Kb& kb, IndId a, IndId b) {
    if (auto t = existing(kb, TermKind::Inter, {a, b})) return t;
    return existing(kb, TermKind::Inter, {b, a});
}

// Lieu enclave: every z in external contact with c(ground . -x) is in external
// contact with y, read over declared entities and with at least one witness.
void enclave(Kb& kb, EntityId x, EntityId y, const std::vector<FactId>& cls) {
    EntityId g = kb.options().ground;
    if (g == kNone) return;
    auto sg = kb.sref_of(g), sx = kb.sref_of(x), sy = kb.sref_of(y);
    if (!sg || !sx || !sy) return;
    auto cm = compl_term(kb, *sx);
    if (!cm) return;
    auto in = find_inter(kb, *sg, *cm);
    if (!in) return;
    auto k = closure_term(kb, *in);
    if (!k) return;
    auto touch = yes(kb, Rel::C, *sx, *sy);
    if (!touch) return;
    std::vector<FactId> prem = cls;
    prem.push_back(*touch);
    int witnesses = 0;
    for (EntityId z : kb.entity_ids()) {
        if (z == x || z == y) continue;
        auto sz = kb.sref_of(z);
        if (!sz) continue;
        Status s = kb.status(A(Rel::EC, *sz, *k));
        if (s == Status::Refuted) continue;
        if (s == Status::Unknown) return;
        auto e = yes(kb, Rel::EC, *sz, *sy);
        if (!e) return;
        prem.push_back(*yes(kb, Rel::EC, *sz, *k));
        prem.push_back(*e);
        ++witnesses;
    }
    if (witnesses > 0) kb.derive_v(A(Rel::TDs, x, y), true, R::D52C4, prem, "lieu enclave");
}

bool obj_or_mat(EntityClass c) { return c == kObj || c == kMat; }

std::optional<FactId> comp_or_piece(const Kb& kb, EntityId x, EntityId y) {
    if (auto f = yes(kb, Rel::Component, x, y)) return f;
    return yes(kb, Rel::Piece, x, y);
}

// D54, with the rest taken as whole minus part in both clauses.
void part_of(Kb& kb, EntityId x, EntityId y, EntityClass cx, EntityClass cy) {
    bool objs = obj_or_mat(cx) && obj_or_mat(cy);
    if (auto p = yes(kb, Rel::Part, x, y)) {
        auto kind = comp_or_piece(kb, x, y);
        auto nc = no(kb, Rel::Component, x, y), np = no(kb, Rel::Piece, x, y);
        if (!objs) {
            kb.derive(A(Rel::DPt, x, y), true, R::D54, {*p}, "contrast not required for these classes");
        } else if (nc && np) {
            kb.derive(A(Rel::DPt, x, y), true, R::D54, {*p, *nc, *np}, "contrast not required for this meronymy");
        } else if (kind) {
            if (auto z = make_rest(kb, y, x))
                if (auto t = yes(kb, Rel::TDs, x, *z))
                    kb.derive(A(Rel::DPt, x, y), true, R::D54, {*p, *kind, *t},
                              "contrast: " + kb.ent_str(x) + " inside " + kb.ent_str(*z));
        }
    }
    if (!objs) return;
    if (auto kind = comp_or_piece(kb, y, x))
        if (auto z = make_rest(kb, x, y))
            if (auto t = yes(kb, Rel::TDs, *z, y))
                kb.derive(A(Rel::DPt, x, y), true, R::D54, {*kind, *t},
                          "contrast: " + kb.ent_str(*z) + " inside " + kb.ent_str(y));
}


void containment(Kb& kb) {
    auto ents = kb.entity_ids();
    for (EntityId x : ents)
        for (EntityId y : ents) {
            if (x == y) continue;
            auto cx = kb.class_of(x), cy = kb.class_of(y);
            if (!cx || !cy || *cx == EntityClass::Plural || *cy == EntityClass::Plural) continue;
            auto sx = kb.sref_of(x);
            if (!sx) continue;
            auto ix = interior_term(kb, *sx);
            auto clsf = [&](EntityId e, EntityClass c) { return yes(kb, class_rel(c), e); };
            std::vector<FactId> cls;
            if (auto f = clsf(x, *cx)) cls.push_back(*f);
            if (auto f = clsf(y, *cy)) cls.push_back(*f);
            auto with_cls = [&](std::initializer_list<FactId> more) {
                std::vector<FactId> p = cls;
                p.insert(p.end(), more.begin(), more.end());
                return p;
            };
            if (in(cx, {kObj, kMat}) && in(cy, {kObj, kMat, kLoc})) {
                if (auto u = interior_ent(kb, y); u && ix) {
                    IndId su = kb.sref(*u);
                    if (auto p = yes(kb, Rel::P, *ix, su)) kb.derive_v(A(Rel::TDs, x, y), true, R::D52, with_cls({*p}));
                    if (auto o = yes(kb, Rel::O, *ix, su)) kb.derive_v(A(Rel::PDs, x, y), true, R::D53, with_cls({*o}));
                }
            }
            if (in(cx, {kObj, kSp}) && cy == kSp && ix) {
                IndId sy = kb.sref(y);
                if (auto p = yes(kb, Rel::P, *ix, sy)) kb.derive_v(A(Rel::TDs, x, y), true, R::D52, with_cls({*p}));
            }
            if (in(cx, {kObj, kMat}) && cy == kSp && ix) {
                if (auto o = yes(kb, Rel::O, *ix, kb.sref(y)))
                    kb.derive_v(A(Rel::PDs, x, y), true, R::D53, with_cls({*o}));
            }
            if (cx == kSp && in(cy, {kObj, kMat})) {
                if (auto u = interior_ent(kb, y)) {
                    if (*u == x) kb.derive_v(A(Rel::TDs, x, y), true, R::D52, cls, "x is the interior of y");
                    else if (auto pc = yes(kb, Rel::Piece, x, *u))
                        kb.derive_v(A(Rel::TDs, x, y), true, R::D52, with_cls({*pc}));
                }
            }
            if (cx == kLoc && cy == kLoc) enclave(kb, x, y, cls);
            part_of(kb, x, y, *cx, *cy);
        }
}

// ---------------------------------------------------------- quantities

void quantities(Kb& kb) {
    auto q = kb.entities().quantity;
    for (FactId f : kb.facts_of(Rel::Part, true)) {
        Atom a = kb.canonical(kb.fact(f).atom);
        for (FactId g : with(kb, Rel::Q, true, 0, a.a[0]))
            if (auto h = yes(kb, Rel::Q, a.a[1], kb.fact(g).atom.a[1]))
                kb.derive(A(Rel::Portion, a.a[0], a.a[1]), true, R::PortionDer, {f, g, *h});
    }
    // A41
    for (auto [x0, s0] : q)
        for (auto [y0, s1] : q) {
            EntityId x = kb.canon_entity(x0), y = kb.canon_entity(y0);
            if (x >= y || kb.canon_entity(s0) != kb.canon_entity(s1)) continue;
            auto sx = kb.sref_of(x), sy = kb.sref_of(y);
            if (!sx || !sy || *sx != *sy) continue;
            auto cx = no(kb, Rel::Coll, x), cy = no(kb, Rel::Coll, y);
            auto qx = yes(kb, Rel::Q, x, s0), qy = yes(kb, Rel::Q, y, s1);
            if (cx && cy && qx && qy) kb.derive(A(Rel::Same, x, y), true, R::A41, {*cx, *cy, *qx, *qy});
        }
}

}  // namespace

// Positive closure only; closed-world refutations are left to the query evaluator.
bool Kb::closure_pass(bool negative) {
    if (negative) return false;
    size_t before = store_.size(), terms = terms_.size(), ents = ents_.size();
    connection_closure(*this);
    sum_closure(*this);
    front_by_use(*this);
    total_support(*this);
    interior_axioms(*this);
    containment(*this);
    quantities(*this);
    return store_.size() != before || terms_.size() != terms || ents_.size() != ents || !agenda_.empty() ||
           need_rekey_;
}

}  // namespace topos
