#include "topos/support.hpp"

namespace topos {

namespace {

Verdict ask(Kb& kb, Rel r, std::vector<uint32_t> args) { return kb.query(Literal{r, true, std::move(args), {}}, kb.limits()); }

void ensure(Kb& kb) {
    if (!kb.saturated()) kb.saturate(kb.limits());
}

}  // namespace

std::optional<IndId> zonecont(Kb& kb, IndId x, IndId y) {
    ensure(kb);
    if (auto z = kb.terms().find_existing(TermKind::Skolem, {kb.terms().canon(x), kb.terms().canon(y)}, "zone"))
        return kb.terms().canon(*z);
    return std::nullopt;
}

Status plus_haut(Kb& kb, IndId z1, IndId z2) {
    ensure(kb);
    if (kb.terms().canon(z1) == kb.terms().canon(z2)) return Status::Refuted;
    return kb.status(make_atom(Rel::PlusHaut, z1, z2));
}

std::string cont_kind(Kb& kb, IndId x, IndId y) {
    ensure(kb);
    for (Rel r : {Rel::Cont1, Rel::Cont2, Rel::Cont3})
        if (kb.status(make_atom(r, x, y)) == Status::Entailed) return std::string(rel_name(r));
    return "none";
}

Verdict stabilizes(Kb& kb, EntityId y, EntityId x) { return ask(kb, Rel::Stabilise, {y, x}); }
Verdict stab_tot(Kb& kb, EntityId y, EntityId x) { return ask(kb, Rel::StabTot, {y, x}); }

Verdict sur(Kb& kb, EntityId x, EntityId y) {
    std::string failed;
    bool all_refuted = true;
    for (Rel r : {Rel::Sur1, Rel::Sur2, Rel::Sur3}) {
        Verdict v = ask(kb, r, {x, y});
        if (v.status == Status::Entailed) return v;
        if (v.status != Status::Refuted) all_refuted = false;
        failed += (failed.empty() ? "" : "; ") + std::string(rel_name(r)) + ": " + v.failed;
    }
    Verdict out;
    out.status = all_refuted ? Status::Refuted : Status::Unknown;
    out.case_tag = "none";
    out.failed = failed;
    return out;
}

Verdict tds(Kb& kb, EntityId x, EntityId y) { return ask(kb, Rel::TDs, {x, y}); }
Verdict pds(Kb& kb, EntityId x, EntityId y) { return ask(kb, Rel::PDs, {x, y}); }
Verdict dpt(Kb& kb, EntityId x, EntityId y) { return ask(kb, Rel::DPt, {x, y}); }
Verdict dans(Kb& kb, EntityId x, EntityId y) { return ask(kb, Rel::Dans, {x, y}); }

}  // namespace topos
