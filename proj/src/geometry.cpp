#include "topos/geometry.hpp"

namespace topos {

std::string_view contact_name(ContactKind k) {
    switch (k) {
    case ContactKind::EC: return "EC";
    case ContactKind::ICont: return "ICont";
    case ContactKind::WCont: return "WCont";
    case ContactKind::None: return "none";
    case ContactKind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

void ensure(Kb& kb) {
    if (!kb.saturated()) kb.saturate(kb.limits());
}

Literal lit(Rel r, std::vector<uint32_t> args) { return Literal{r, true, std::move(args), {}}; }

}  // namespace

Verdict eval_relation(Kb& kb, Rel rel, const std::vector<uint32_t>& args) {
    return kb.query(lit(rel, args), kb.limits());
}

ContactKind classify_contact(Kb& kb, IndId x, IndId y) {
    ensure(kb);
    for (auto [r, k] : {std::pair{Rel::EC, ContactKind::EC}, std::pair{Rel::ICont, ContactKind::ICont},
                        std::pair{Rel::WCont, ContactKind::WCont}})
        if (kb.status(make_atom(r, x, y)) == Status::Entailed) return k;
    if (kb.status(make_atom(Rel::Cont, x, y)) == Status::Refuted) return ContactKind::None;
    bool all_refuted = true;
    for (Rel r : {Rel::EC, Rel::ICont, Rel::WCont})
        all_refuted &= kb.status(make_atom(r, x, y)) == Status::Refuted;
    return all_refuted ? ContactKind::None : ContactKind::Unknown;
}

IndId boundary(Kb& kb, BoundaryOp op, IndId y) {
    const char* tag = op == BoundaryOp::Env ? "env" : op == BoundaryOp::Contour ? "contour" : "ends";
    Rel r = op == BoundaryOp::Env ? Rel::Env : op == BoundaryOp::Contour ? Rel::Contour : Rel::Ends;
    IndId b = kb.construct_skolem(tag, {y});
    kb.derive(make_atom(r, b, y), true, RuleId::D15, {});
    ensure(kb);
    return kb.terms().canon(b);
}

Status limit_check(Kb& kb, int k, IndId x, IndId y) {
    if (k < 1 || k > 3) throw KbError("limit tier must be 1, 2 or 3");
    ensure(kb);
    Rel r = k == 1 ? Rel::Lim1 : k == 2 ? Rel::Lim2 : Rel::Lim3;
    return kb.status(make_atom(r, x, y));
}

std::string limit_kind(Kb& kb, IndId x, IndId y) {
    ensure(kb);
    for (Rel r : {Rel::Surface, Rel::Line, Rel::Point})
        if (kb.status(make_atom(r, x, y)) == Status::Entailed) return std::string(rel_name(r));
    return "none";
}

std::vector<DirId> dir_candidates(Kb& kb, IndId y, IndId z, IndId x) {
    ensure(kb);
    std::vector<DirId> out;
    for (DirId d : kb.directions())
        if (kb.status(make_atom(Rel::Exts, y, z, x, d)) != Status::Refuted) out.push_back(d);
    return out;
}

}  // namespace topos
