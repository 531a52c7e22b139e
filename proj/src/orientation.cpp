#include "topos/orientation.hpp"

namespace topos {

namespace {

Verdict ask(Kb& kb, Rel r, std::vector<uint32_t> args) { return kb.query(Literal{r, true, std::move(args), {}}, kb.limits()); }

Verdict over_directions(Kb& kb, Rel r, EntityId y, EntityId x) {
    Verdict best;
    bool refuted_all = true;
    std::vector<DirId> dirs = kb.directions();
    for (DirId d : dirs) {
        Verdict v = ask(kb, r, {y, x, d});
        if (v.status == Status::Entailed) {
            if (best.status != Status::Entailed) best = v;
            else best.witness.insert(best.witness.end(), v.witness.begin(), v.witness.end());
        }
        if (v.status != Status::Refuted) refuted_all = false;
        if (best.status != Status::Entailed && best.failed.empty()) best.failed = v.failed;
    }
    if (best.status == Status::Entailed) return best;
    best.status = refuted_all && !dirs.empty() ? Status::Refuted : Status::Unknown;
    best.case_tag = std::string(rel_name(r));
    return best;
}

}  // namespace

std::optional<DirId> eval_dir_ext(Kb& kb, EntityId y, EntityId z, EntityId x) {
    if (!kb.saturated()) kb.saturate(kb.limits());
    for (FactId f : kb.facts_with(Rel::DirExt, true, 2, x)) {
        const Atom& a = kb.fact(f).atom;
        if (kb.canon_entity(a.a[0]) == kb.canon_entity(y) && kb.canon_entity(a.a[1]) == kb.canon_entity(z))
            return kb.dirs().canon(a.a[3]);
        if (kb.canon_entity(a.a[0]) == kb.canon_entity(z) && kb.canon_entity(a.a[1]) == kb.canon_entity(y))
            return kb.dirs().canon(kb.opposite(a.a[3]));
    }
    auto sy = kb.sref_of(y), sz = kb.sref_of(z), sx = kb.sref_of(x);
    if (!sy || !sz || !sx) return std::nullopt;
    for (DirId d : kb.directions())
        if (kb.status(make_atom(Rel::Exts, *sy, *sz, *sx, d)) == Status::Entailed) return d;
    return std::nullopt;
}

Verdict eval_orient_haut(Kb& kb, DirId d, EntityId x) { return ask(kb, Rel::OrientHaut, {d, x}); }
Verdict eval_orient_bas(Kb& kb, DirId d, EntityId x) { return ask(kb, Rel::OrientBas, {d, x}); }
Verdict eval_orient_avant(Kb& kb, DirId d, EntityId x) { return ask(kb, Rel::OrientAvant, {d, x}); }
Verdict eval_in_sp(Kb& kb, EntityId y, EntityId x, DirId d) { return ask(kb, Rel::InSp, {y, x, d}); }
Verdict eval_devant_i(Kb& kb, EntityId y, EntityId x) { return over_directions(kb, Rel::DevantI, y, x); }
Verdict eval_devant_d(Kb& kb, EntityId y, EntityId x) { return over_directions(kb, Rel::DevantD, y, x); }
Verdict eval_derriere_i(Kb& kb, EntityId y, EntityId x) { return over_directions(kb, Rel::DerriereI, y, x); }
Verdict eval_derriere_d(Kb& kb, EntityId y, EntityId x) { return over_directions(kb, Rel::DerriereD, y, x); }

}  // namespace topos
