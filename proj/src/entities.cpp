#include "topos/entities.hpp"

#include <algorithm>

#include "topos/engine.hpp"

namespace topos {

std::string_view class_name(EntityClass c) {
    switch (c) {
    case EntityClass::Obj: return "Obj";
    case EntityClass::Mat: return "Mat";
    case EntityClass::Subst: return "Subst";
    case EntityClass::Loc: return "Loc";
    case EntityClass::SpPort: return "Sp-port";
    case EntityClass::Plural: return "Plural";
    }
    return "?";
}

std::optional<EntityClass> parse_class(std::string_view s) {
    if (s == "Obj") return EntityClass::Obj;
    if (s == "Mat") return EntityClass::Mat;
    if (s == "Subst") return EntityClass::Subst;
    if (s == "Loc") return EntityClass::Loc;
    if (s == "Sp-port" || s == "SpPort") return EntityClass::SpPort;
    if (s == "Plural") return EntityClass::Plural;
    return std::nullopt;
}

Rel class_rel(EntityClass c) {
    switch (c) {
    case EntityClass::Obj: return Rel::Obj;
    case EntityClass::Mat: return Rel::Mat;
    case EntityClass::Subst: return Rel::Subst;
    case EntityClass::Loc: return Rel::Loc;
    case EntityClass::SpPort: return Rel::SpPort;
    case EntityClass::Plural: break;
    }
    throw KbError("plural entities have no atomic class");
}

std::string_view size_name(SizeLevel s) {
    switch (s) {
    case SizeLevel::Unknown: return "unknown";
    case SizeLevel::Tiny: return "tiny";
    case SizeLevel::Small: return "small";
    case SizeLevel::Medium: return "medium";
    case SizeLevel::Large: return "large";
    case SizeLevel::Huge: return "huge";
    }
    return "?";
}

std::optional<SizeLevel> parse_size(std::string_view s) {
    for (SizeLevel l : {SizeLevel::Unknown, SizeLevel::Tiny, SizeLevel::Small, SizeLevel::Medium, SizeLevel::Large,
                        SizeLevel::Huge})
        if (size_name(l) == s) return l;
    return std::nullopt;
}

std::string_view interior_mode_name(InteriorMode m) {
    switch (m) {
    case InteriorMode::None: return "none";
    case InteriorMode::Concavity: return "containing-concavity";
    case InteriorMode::Outline: return "outline";
    case InteriorMode::ComplementComponent: return "complement-component";
    case InteriorMode::LieuColumn: return "lieu-column";
    }
    return "?";
}

EntityId EntityStore::add(Entity e) {
    EntityId id = EntityId(entities_.size());
    e.id = id;
    if (e.atoms.empty()) e.atoms = {id};
    names_[e.name] = id;
    entities_.push_back(std::move(e));
    uf_.add();
    if (entities_[id].cls == EntityClass::Plural) register_plural(id);
    return id;
}

std::optional<EntityId> EntityStore::find(const std::string& name) const {
    if (auto it = names_.find(name); it != names_.end()) return canon(it->second);
    return std::nullopt;
}

std::vector<EntityId> EntityStore::representatives() const {
    std::vector<EntityId> out;
    for (EntityId i = 0; i < entities_.size(); ++i)
        if (canon(i) == i) out.push_back(i);
    return out;
}

std::optional<EntityId> EntityStore::plural_with(const std::vector<EntityId>& atoms) const {
    if (auto it = plurals_.find(atoms); it != plurals_.end()) return canon(it->second);
    return std::nullopt;
}

// ------------------------------------------------------------- kb-core ---

namespace {

bool one_of(EntityClass c, std::initializer_list<EntityClass> set) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

}  // namespace

EntityId Kb::declare_entity(const std::string& name, EntityClass cls, const Attributes& attrs) {
    if (name.empty()) throw KbError("entity name is empty");
    if (ents_.find(name)) throw KbError("entity '" + name + "' is already declared");
    if (cls == EntityClass::Plural) throw KbError("plural entities come from sums, not declarations");
    std::vector<EntityId> depends;
    for (const auto& d : attrs.depend) {
        auto t = find_entity(d);
        if (!t) throw KbError("Depend target '" + d + "' of '" + name + "' is not declared");
        depends.push_back(*t);
    }
    if (cls == EntityClass::SpPort) {
        bool ok = false;
        for (EntityId t : depends) ok |= one_of(entity(t).cls, {EntityClass::Obj, EntityClass::Mat, EntityClass::Loc});
        if (!ok)
            throw AxiomViolation("A42: space portion '" + name + "' needs a Depend target of class Obj, Mat or Loc",
                                 "A42");
    }
    if ((attrs.container || attrs.can_contain) && !one_of(cls, {EntityClass::Obj, EntityClass::Mat}))
        throw KbError("Container on '" + name + "' requires class Obj or Mat");
    if ((attrs.scattered || attrs.surrounding) && !one_of(cls, {EntityClass::Obj, EntityClass::Mat}))
        throw KbError("interior shape flags on '" + name + "' require class Obj or Mat");

    Entity e;
    e.name = name;
    e.cls = cls;
    e.attrs = attrs;
    EntityId id = ents_.add(std::move(e));
    sref(id);
    clean_ = false;

    derive(make_atom(class_rel(cls), id), true, RuleId::Asserted, {}, "declared class");
    derive(make_atom(Rel::At, id), true, RuleId::D34, {});
    auto flag = [&](bool on, Rel r) {
        if (on) derive(make_atom(r, id), true, RuleId::Asserted, {}, "declared attribute");
    };
    flag(attrs.can_use, Rel::CanUse);
    flag(attrs.in_use, Rel::InUse);
    flag(attrs.container, Rel::Container);
    flag(attrs.can_contain, Rel::CanContain);
    flag(attrs.speaker, Rel::Speaker);
    flag(attrs.complex_shape, Rel::ComplexShape);
    if (attrs.intrinsic_stabilizer)
        derive(make_atom(Rel::IntrinsicStabilizer, id), *attrs.intrinsic_stabilizer, RuleId::Asserted, {},
               "declared attribute");
    for (EntityId t : depends) derive(make_atom(Rel::Depend, id, t), true, RuleId::Asserted, {}, "declared attribute");
    for (const auto& d : attrs.orient_gen) {
        DirId dir = find_direction(d).value_or(kNone);
        if (dir == kNone) dir = declare_direction(d);
        derive(make_atom(Rel::OrientGen, id, dir), true, RuleId::Asserted, {}, "declared attribute");
    }
    if (attrs.ground) options_.ground = id;
    entity_axioms(*this, id);
    return id;
}

std::optional<EntityId> Kb::find_entity(const std::string& name) const { return ents_.find(name); }

EntityId Kb::plural_sum(EntityId x, EntityId y) {
    x = ents_.canon(x);
    y = ents_.canon(y);
    if (x == y) return x;
    std::vector<EntityId> atoms = entity(x).atoms;
    for (EntityId a : entity(y).atoms) atoms.push_back(a);
    for (auto& a : atoms) a = ents_.canon(a);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (atoms.size() == 1) return atoms.front();
    if (auto p = ents_.plural_with(atoms)) return *p;

    Entity e;
    for (size_t i = 0; i < atoms.size(); ++i) e.name += (i ? "+" : "") + entity(atoms[i]).name;
    e.cls = EntityClass::Plural;
    e.origin = EntityOrigin::PluralSum;
    e.atoms = atoms;
    e.origin_args = {x, y};
    EntityId p = ents_.add(std::move(e));
    clean_ = false;

    derive(make_atom(Rel::At, p), false, RuleId::D34, {});
    std::vector<IndId> parts;
    for (EntityId a : atoms) parts.push_back(sref(a));
    IndId whole = construct_sum(parts);
    derive(make_atom(Rel::Eqs, sref(p), whole), true, RuleId::A32, {});
    // free lattice: every existing plural or atom below/above by atom inclusion
    for (EntityId q : entity_ids()) {
        if (q == p) continue;
        const auto& qa = entity(q).atoms;
        bool q_below = std::includes(atoms.begin(), atoms.end(), qa.begin(), qa.end());
        bool p_below = std::includes(qa.begin(), qa.end(), atoms.begin(), atoms.end());
        if (entity(q).cls != EntityClass::Plural && !q_below) continue;
        if (q_below) derive(make_atom(Rel::Leq, q, p), true, RuleId::A32, {});
        if (p_below) derive(make_atom(Rel::Leq, p, q), true, RuleId::A32, {});
    }
    entity_axioms(*this, p);
    return p;
}

void Kb::assert_is_coll(EntityId x, EntityId y) {
    x = ents_.canon(x);
    y = ents_.canon(y);
    if (x == y)
        throw AxiomViolation("A35: '" + entity(x).name + "' cannot be both atomic and non-atomic", "A35");
    if (entity(x).cls == EntityClass::Plural)
        throw AxiomViolation("A35: collection '" + entity(x).name + "' must be atomic", "A35");
    if (entity(y).cls != EntityClass::Plural)
        throw AxiomViolation("A35: '" + entity(y).name + "' must be a plural entity", "A35");
    if (auto it = ents_.is_coll.find(x); it != ents_.is_coll.end() && ents_.canon(it->second) != y)
        throw AxiomViolation("A37: '" + entity(x).name + "' is already the collection of '" +
                                 entity(it->second).name + "', not of '" + entity(y).name + "'",
                             "A37");
    ents_.is_coll[x] = y;
    derive(make_atom(Rel::IsColl, x, y), true, RuleId::Asserted, {});
}

void Kb::assert_quantity(EntityId x, EntityId y) {
    x = ents_.canon(x);
    y = ents_.canon(y);
    if (entity(x).cls != EntityClass::Mat)
        throw AxiomViolation("A38: '" + entity(x).name + "' is not a portion of matter (Mat)", "A38");
    if (entity(y).cls != EntityClass::Subst)
        throw AxiomViolation("A38: '" + entity(y).name + "' is not a substance (Subst)", "A38");
    if (auto it = ents_.quantity.find(x); it != ents_.quantity.end() && ents_.canon(it->second) != y)
        throw AxiomViolation("A39: '" + entity(x).name + "' is already a quantity of '" + entity(it->second).name +
                                 "', not of '" + entity(y).name + "'",
                             "A39");
    ents_.quantity[x] = y;
    derive(make_atom(Rel::Q, x, y), true, RuleId::Asserted, {});
}

EntityId Kb::quantity_sum(EntityId x, EntityId z) {
    x = ents_.canon(x);
    z = ents_.canon(z);
    auto sx = ents_.quantity.find(x);
    auto sz = ents_.quantity.find(z);
    if (sx == ents_.quantity.end() || sz == ents_.quantity.end() ||
        ents_.canon(sx->second) != ents_.canon(sz->second))
        throw KbError("A40 needs two quantities of the same substance");
    if (x == z) return x;
    auto key = std::minmax(x, z);
    if (auto it = ents_.qsum.find(key); it != ents_.qsum.end()) return ents_.canon(it->second);
    EntityId s = ents_.canon(sx->second);
    Entity e;
    e.name = entity(key.first).name + "+" + entity(key.second).name;
    e.cls = EntityClass::Mat;
    e.origin = EntityOrigin::QuantitySum;
    e.origin_args = {key.first, key.second};
    EntityId t = ents_.add(std::move(e));
    ents_.qsum[key] = t;
    ents_.quantity[t] = s;
    IndId st = sref(t);
    clean_ = false;
    derive(make_atom(Rel::Mat, t), true, RuleId::A40, {});
    derive(make_atom(Rel::At, t), true, RuleId::A40, {});
    derive(make_atom(Rel::Q, t, s), true, RuleId::A40, {});
    derive(make_atom(Rel::Eqs, st, construct_sum({sref(x), sref(z)})), true, RuleId::A40, {});
    entity_axioms(*this, t);
    return t;
}

EntityId Kb::interior_of(EntityId x) {
    x = ents_.canon(x);
    if (auto it = ents_.interior.find(x); it != ents_.interior.end()) return ents_.canon(it->second);
    const Entity& owner = entity(x);
    if (!one_of(owner.cls, {EntityClass::Obj, EntityClass::Mat, EntityClass::Loc}))
        throw KbError("A49: '" + owner.name + "' of class " + std::string(class_name(owner.cls)) +
                          " has no interior",
                      "A49");
    Entity e;
    e.name = "int(" + owner.name + ")";
    e.cls = EntityClass::SpPort;
    e.origin = EntityOrigin::Interior;
    e.origin_args = {x};
    if (owner.cls == EntityClass::Loc) e.interior_mode = InteriorMode::LieuColumn;
    else if (owner.attrs.scattered) e.interior_mode = InteriorMode::Outline;
    else if (owner.attrs.surrounding) e.interior_mode = InteriorMode::ComplementComponent;
    else if (owner.attrs.container || owner.attrs.can_contain) e.interior_mode = InteriorMode::Concavity;
    else e.interior_mode = InteriorMode::Outline;
    InteriorMode mode = e.interior_mode;
    bool loc = owner.cls == EntityClass::Loc;
    EntityId t = ents_.add(std::move(e));
    ents_.interior[x] = t;
    IndId so = sref(x);
    IndId st = sref(t);
    clean_ = false;
    std::string note(interior_mode_name(mode));
    derive(make_atom(Rel::SpPort, t), true, RuleId::A49, {}, note);
    derive(make_atom(Rel::At, t), true, RuleId::A49, {});
    derive(make_atom(Rel::Depend, t, x), true, RuleId::A49, {});
    derive(make_atom(Rel::ICont, so, st), true, RuleId::A49, {});
    if (!loc) {
        IndId it = construct_interior(st);
        IndId pre = construct_skolem("preint", {so});
        derive(make_atom(Rel::P, it, pre), true, RuleId::A49, {});
    }
    entity_axioms(*this, t);
    return t;
}

EntityId Kb::rest_of(EntityId whole, EntityId part) {
    whole = ents_.canon(whole);
    part = ents_.canon(part);
    if (whole == part) throw KbError("Rest of an entity with itself is empty");
    auto key = std::make_pair(whole, part);
    if (auto it = ents_.rest.find(key); it != ents_.rest.end()) return ents_.canon(it->second);
    const Entity& w = entity(whole);
    Entity e;
    e.name = "rest(" + w.name + ", " + entity(part).name + ")";
    e.cls = w.cls == EntityClass::Plural ? EntityClass::Obj : w.cls;
    e.attrs.container = w.attrs.container;
    e.attrs.can_contain = w.attrs.can_contain;
    e.attrs.scattered = w.attrs.scattered;
    e.attrs.surrounding = w.attrs.surrounding;
    e.origin = EntityOrigin::Rest;
    e.origin_args = {whole, part};
    EntityClass cls = e.cls;
    EntityId r = ents_.add(std::move(e));
    ents_.rest[key] = r;
    IndId sr = sref(r);
    IndId sp = sref(part);
    IndId sw = sref(whole);
    clean_ = false;
    derive(make_atom(class_rel(cls), r), true, RuleId::RestDef, {});
    derive(make_atom(Rel::At, r), true, RuleId::RestDef, {});
    derive(make_atom(Rel::Rest, whole, part, r), true, RuleId::RestDef, {});
    derive(make_atom(Rel::Eqs, construct_sum({sr, sp}), sw), true, RuleId::RestDef, {});
    derive(make_atom(Rel::O, sr, sp), false, RuleId::RestDef, {});
    entity_axioms(*this, r);
    return r;
}

}  // namespace topos
