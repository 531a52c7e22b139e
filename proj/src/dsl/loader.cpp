#include "topos/dsl/loader.hpp"

#include <filesystem>

#include "topos/dsl/parser.hpp"
#include "topos/dsl/printer.hpp"
#include "topos/meronymy.hpp"

namespace topos::dsl {

namespace {

bool bool_value(const AttrEntry& a) {
    if (!a.value || *a.value == "true") return true;
    if (*a.value == "false") return false;
    throw DslError(a.loc, "attribute " + a.key + " expects true or false, got '" + *a.value + "'");
}

const std::string& need_value(const AttrEntry& a) {
    if (!a.value) throw DslError(a.loc, "attribute " + a.key + " needs a value");
    return *a.value;
}

void need_args(const Expr& e, size_t lo, size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi)
        throw DslError(e.loc, e.head + "(..) takes " + std::to_string(lo) +
                                  (hi == lo ? "" : hi == SIZE_MAX ? " or more" : "-" + std::to_string(hi)) +
                                  " argument" + (hi == 1 ? "" : "s"));
}

bool is_entity_form(const std::string& h) { return h == "int" || h == "rest" || h == "plural"; }

}  // namespace

Attributes parse_attributes(const std::vector<AttrEntry>& entries) {
    Attributes at;
    for (const auto& a : entries) {
        const auto& k = a.key;
        if (k == "CanUse" || k == "Can-Use") at.can_use = bool_value(a);
        else if (k == "InUse" || k == "In-Use") at.in_use = bool_value(a);
        else if (k == "Container") at.container = bool_value(a);
        else if (k == "CanContain" || k == "Can-contain") at.can_contain = bool_value(a);
        else if (k == "Speaker") at.speaker = bool_value(a);
        else if (k == "ComplexShape" || k == "Complex-shape") at.complex_shape = bool_value(a);
        else if (k == "Ground") at.ground = bool_value(a);
        else if (k == "Scattered") at.scattered = bool_value(a);
        else if (k == "Surrounding") at.surrounding = bool_value(a);
        else if (k == "IntrinsicStabilizer" || k == "Stabilisateur_Intrinseque") at.intrinsic_stabilizer = bool_value(a);
        else if (k == "Depend") at.depend.push_back(need_value(a));
        else if (k == "OrientGen" || k == "Orient-gen") at.orient_gen.push_back(need_value(a));
        else if (k == "HSize" || k == "VSize") {
            auto s = parse_size(need_value(a));
            if (!s || *s == SizeLevel::Unknown)
                throw DslError(a.loc, "unknown size '" + *a.value + "' (tiny, small, medium, large, huge)");
            (k == "HSize" ? at.hsize : at.vsize) = *s;
        } else {
            throw DslError(a.loc, "unknown attribute '" + k + "'");
        }
    }
    return at;
}

EntityId resolve_entity(Kb& kb, const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
        auto id = kb.find_entity(e.head);
        if (!id) throw DslError(e.loc, "undeclared entity '" + e.head + "'");
        return *id;
    }
    if (e.kind != Expr::Kind::Call) throw DslError(e.loc, "expected an entity");
    if (e.head == "int") {
        need_args(e, 1, 1);
        return kb.interior_of(resolve_entity(kb, e.args[0]));
    }
    if (e.head == "rest") {
        need_args(e, 2, 2);
        return kb.rest_of(resolve_entity(kb, e.args[0]), resolve_entity(kb, e.args[1]));
    }
    if (e.head == "plural") {
        need_args(e, 2, SIZE_MAX);
        EntityId acc = resolve_entity(kb, e.args[0]);
        for (size_t i = 1; i < e.args.size(); ++i) acc = kb.plural_sum(acc, resolve_entity(kb, e.args[i]));
        return acc;
    }
    throw DslError(e.loc, "'" + e.head + "' does not denote an entity");
}

IndId resolve_individual(Kb& kb, const Expr& e) {
    if (e.kind == Expr::Kind::Set) throw DslError(e.loc, "expected an individual");
    if (e.kind == Expr::Kind::Name) {
        if (e.head == "univ") return kb.universal();
        if (auto id = kb.find_entity(e.head)) return kb.sref(*id);
        throw DslError(e.loc, "undeclared entity '" + e.head + "'");
    }
    const auto& h = e.head;
    if (is_entity_form(h)) return kb.sref(resolve_entity(kb, e));
    try {
        if (h == "sref") {
            need_args(e, 1, 1);
            return kb.sref(resolve_entity(kb, e.args[0]));
        }
        if (h == "sum") {
            need_args(e, 1, SIZE_MAX);
            std::vector<IndId> parts;
            for (const auto& a : e.args) parts.push_back(resolve_individual(kb, a));
            return kb.construct_sum(parts);
        }
        if (h == "inter") {
            need_args(e, 2, 2);
            return kb.construct_inter(resolve_individual(kb, e.args[0]), resolve_individual(kb, e.args[1]));
        }
        if (h == "i" || h == "c" || h == "compl") {
            need_args(e, 1, 1);
            IndId x = resolve_individual(kb, e.args[0]);
            return h == "i" ? kb.construct_interior(x) : h == "c" ? kb.construct_closure(x) : kb.construct_compl(x);
        }
        if (h == "zone" || h == "env" || h == "contour" || h == "ends") {
            need_args(e, h == "zone" ? 2 : 1, h == "zone" ? 2 : 1);
            std::vector<IndId> args;
            for (const auto& a : e.args) args.push_back(kb.terms().canon(resolve_individual(kb, a)));
            return kb.construct_skolem(h, args);
        }
    } catch (const TermError& err) {
        throw DslError(e.loc, err.what());
    }
    throw DslError(e.loc, "unknown individual constructor '" + h + "'");
}

DirId resolve_direction(Kb& kb, const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
        auto d = kb.find_direction(e.head);
        if (!d) throw DslError(e.loc, "undeclared direction '" + e.head + "'");
        return *d;
    }
    if (e.kind == Expr::Kind::Call && e.head == "opp") {
        need_args(e, 1, 1);
        return kb.opposite(resolve_direction(kb, e.args[0]));
    }
    throw DslError(e.loc, "expected a direction");
}

Literal resolve_literal(Kb& kb, const LiteralExpr& lx) {
    auto r = find_rel(lx.rel);
    if (!r) throw DslError(lx.loc, "unknown relation '" + lx.rel + "'");
    Literal lit;
    lit.rel = *r;
    lit.positive = lx.positive;
    const auto& sig = rel_info(*r).sig;
    size_t want = sig.size() + (*r == Rel::Allen ? 1 : 0);
    if (lx.args.size() != want)
        throw DslError(lx.loc, lx.rel + " expects " + std::to_string(want) + " arguments, got " +
                                   std::to_string(lx.args.size()));
    for (size_t i = 0; i < sig.size(); ++i) {
        const Expr& a = lx.args[i];
        switch (sig[i]) {
        case Sort::Entity: lit.args.push_back(kb.canon_entity(resolve_entity(kb, a))); break;
        case Sort::Individual: lit.args.push_back(resolve_individual(kb, a)); break;
        case Sort::Direction: lit.args.push_back(resolve_direction(kb, a)); break;
        }
    }
    if (*r == Rel::Allen) {
        const Expr& s = lx.args.back();
        if (s.kind != Expr::Kind::Set) throw DslError(s.loc, "Allen expects a relation set {..}");
        for (const auto& it : s.items) {
            auto ar = parse_allen_rel(it);
            if (!ar) throw DslError(s.loc, "unknown Allen relation '" + it + "'");
            lit.mask = lit.mask | AllenSet(*ar);
        }
    }
    return lit;
}

namespace {

void apply_option(Scene& sc, const Stmt& s) {
    const auto& name = s.names.at(0);
    auto flag = [&] {
        if (!s.value || *s.value == "true") return true;
        if (*s.value == "false") return false;
        throw DslError(s.loc, "option " + name + " expects true or false");
    };
    auto number = [&]() -> long long {
        if (!s.value) throw DslError(s.loc, "option " + name + " needs a value");
        try {
            size_t used = 0;
            long long v = std::stoll(*s.value, &used);
            if (used == s.value->size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw DslError(s.loc, "option " + name + " expects a non-negative integer");
    };
    auto& o = sc.kb.options();
    if (name == "closed_stabilization") o.closed_stabilization = flag();
    else if (name == "lieu_separation") o.lieu_separation = flag();
    else if (name == "depth") sc.limits.depth = int(number());
    else if (name == "budget") sc.limits.budget = size_t(number());
    else if (name == "defaults") sc.limits.defaults = flag();
    else if (name == "mero_table") {
        if (!s.value) throw DslError(s.loc, "option mero_table needs a path");
        namespace fs = std::filesystem;
        fs::path p(*s.value);
        if (p.is_relative()) {
            fs::path beside = fs::path(sc.file).parent_path() / p;
            p = fs::exists(beside) ? beside : fs::path(TOPOS_SOURCE_DIR) / p;
        }
        try {
            o.mero_table = CompositionTable::load(p.string());
        } catch (const KbError& err) {
            throw DslError(s.loc, err.what());
        }
    } else {
        throw DslError(s.loc, "unknown option '" + name + "'");
    }
}

void apply(Scene& sc, const Stmt& s) {
    Kb& kb = sc.kb;
    switch (s.kind) {
    case StmtKind::Entity:
        kb.declare_entity(s.names.at(0), *parse_class(s.cls), parse_attributes(s.attrs));
        break;
    case StmtKind::Direction:
        for (const auto& n : s.names) {
            if (kb.find_direction(n)) throw DslError(s.loc, "direction '" + n + "' is already declared");
            kb.declare_direction(n);
        }
        break;
    case StmtKind::Option: apply_option(sc, s); break;
    case StmtKind::Part: {
        auto kind = kind_of(*find_rel(s.lit.rel));
        EntityId x = resolve_entity(kb, s.lit.args.at(0));
        EntityId y = resolve_entity(kb, s.lit.args.at(1));
        assert_part(kb, *kind, x, y);
        break;
    }
    case StmtKind::Assert:
    case StmtKind::DirFact: {
        Literal lit = resolve_literal(kb, s.lit);
        if (lit.positive && lit.rel == Rel::IsColl) kb.assert_is_coll(lit.args[0], lit.args[1]);
        else if (lit.positive && lit.rel == Rel::Q) kb.assert_quantity(lit.args[0], lit.args[1]);
        else kb.assert_literal(lit, "line " + std::to_string(s.loc.line));
        break;
    }
    case StmtKind::Assume: kb.add_assumption(resolve_literal(kb, s.lit), print_literal(s.lit)); break;
    case StmtKind::Query: {
        QueryItem q;
        q.lit = resolve_literal(kb, s.lit);
        q.text = print_literal(s.lit);
        if (s.expect) q.expect = parse_status(*s.expect);
        q.loc = s.loc;
        sc.queries.push_back(std::move(q));
        break;
    }
    }
}

}  // namespace

Scene load(const SceneDocument& doc) {
    Scene sc;
    sc.file = doc.file;
    for (const auto& s : doc.stmts) {
        SourceLoc loc = s.loc;
        try {
            apply(sc, s);
        } catch (const DslError&) {
            throw;
        } catch (const AxiomViolation& v) {
            sc.kb.record_violation(v.axiom(), v.what(), loc);
        } catch (const KbError& err) {
            if (err.axiom().empty()) throw DslError(loc, err.what());
            sc.kb.record_violation(err.axiom(), err.what(), loc);
        } catch (const TermError& err) {
            throw DslError(loc, err.what());
        }
    }
    return sc;
}

Scene load_file(const std::string& path) { return load(parse_file(path)); }

}  // namespace topos::dsl
