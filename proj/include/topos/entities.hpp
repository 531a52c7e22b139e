#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topos/relations.hpp"
#include "topos/terms.hpp"

namespace topos {

enum class EntityClass : uint8_t { Obj, Mat, Subst, Loc, SpPort, Plural };

std::string_view class_name(EntityClass c);
std::optional<EntityClass> parse_class(std::string_view s);
Rel class_rel(EntityClass c);  // not for Plural

// Ordinal size scale for the Catcomp descriptors.
enum class SizeLevel : int8_t { Unknown = -1, Tiny = 0, Small, Medium, Large, Huge };
std::string_view size_name(SizeLevel s);
std::optional<SizeLevel> parse_size(std::string_view s);

enum class InteriorMode : uint8_t { None, Concavity, Outline, ComplementComponent, LieuColumn };
std::string_view interior_mode_name(InteriorMode m);

struct Attributes {
    bool can_use = false;
    bool in_use = false;
    bool container = false;
    bool can_contain = false;
    bool speaker = false;
    bool complex_shape = false;
    bool ground = false;
    bool scattered = false;    // selects the outline interior
    bool surrounding = false;  // selects the complement-component interior
    std::optional<bool> intrinsic_stabilizer;
    std::vector<std::string> depend;
    std::vector<std::string> orient_gen;
    SizeLevel hsize = SizeLevel::Unknown;
    SizeLevel vsize = SizeLevel::Unknown;
};

enum class EntityOrigin : uint8_t { Declared, PluralSum, Interior, Rest, QuantitySum };

struct Entity {
    EntityId id = kNone;
    std::string name;
    EntityClass cls = EntityClass::Obj;
    Attributes attrs;
    EntityOrigin origin = EntityOrigin::Declared;
    std::vector<EntityId> atoms;        // atoms below a plural sum (sorted); {id} for atoms
    std::vector<EntityId> origin_args;  // owner for interiors, (whole, part) for rests, ...
    InteriorMode interior_mode = InteriorMode::None;
};

class KbError : public std::runtime_error {
public:
    explicit KbError(const std::string& msg, std::string axiom = {})
        : std::runtime_error(msg), axiom_(std::move(axiom)) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

// Raised for violations of axioms that are checked eagerly (A35, A37, A39, A42).
class AxiomViolation : public KbError {
public:
    using KbError::KbError;
};

class EntityStore {
public:
    EntityId add(Entity e);
    std::optional<EntityId> find(const std::string& name) const;
    const Entity& get(EntityId id) const { return entities_[id]; }
    Entity& mut(EntityId id) { return entities_[id]; }
    EntityId canon(EntityId id) const { return uf_.find(id); }
    bool merge(EntityId a, EntityId b) { return uf_.unite(a, b); }
    size_t size() const { return entities_.size(); }
    std::vector<EntityId> representatives() const;

    std::optional<EntityId> plural_with(const std::vector<EntityId>& atoms) const;
    void register_plural(EntityId id) { plurals_[entities_[id].atoms] = id; }

    std::map<EntityId, EntityId> is_coll;   // atomic collection -> plural
    std::map<EntityId, EntityId> quantity;  // matter -> substance
    std::map<EntityId, EntityId> interior;  // owner -> interior entity
    std::map<std::pair<EntityId, EntityId>, EntityId> rest;  // (whole, part) -> rest
    std::map<std::pair<EntityId, EntityId>, EntityId> qsum;  // A40 materializations

private:
    std::vector<Entity> entities_;
    std::map<std::string, EntityId> names_;
    std::map<std::vector<EntityId>, EntityId> plurals_;
    UnionFind uf_;
};

}  // namespace topos
