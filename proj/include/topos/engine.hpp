#pragma once

#include <deque>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "topos/allen.hpp"
#include "topos/entities.hpp"
#include "topos/facts.hpp"
#include "topos/meronymy.hpp"
#include "topos/relations.hpp"
#include "topos/rules.hpp"
#include "topos/terms.hpp"

namespace topos {

struct SourceLoc {
    std::string file;
    int line = 0;
    int col = 0;
    std::string str() const;
};

// A signed relation atom over raw (not necessarily canonical) ids.
struct Literal {
    Rel rel = Rel::C;
    bool positive = true;
    std::vector<uint32_t> args;
    AllenSet mask;  // Allen only
};

struct SaturationLimits {
    int depth = 3;
    size_t budget = 2'000'000;
    bool defaults = true;
};

struct SaturationResult {
    size_t facts = 0;
    size_t derived = 0;
    bool partial = false;
    size_t conflicts = 0;
    std::vector<std::string> defaults_applied;
    std::vector<std::string> defaults_blocked;
};

struct ProofHandle {
    uint64_t kb = 0;
    uint64_t generation = 0;
    FactId fact = kNone;
    bool valid() const { return fact != kNone; }
};

struct Verdict {
    Status status = Status::Unknown;
    ProofHandle proof;
    std::string case_tag;   // Sur1, TDs, Orient-avant2, ...
    std::string failed;     // failed conjunct on refusal
    std::string note;
    std::vector<std::string> witness;  // witness directions / speakers
};

struct Violation {
    std::string axiom;
    std::string message;
    SourceLoc loc;
};

struct Options {
    bool lieu_separation = true;
    bool closed_stabilization = false;  // enables the A47 integrity check
    EntityId ground = kNone;
    AllenSet cont2_level = kSameLevelAllen;
    CompositionTable mero_table = CompositionTable::defaults();
};

struct DefaultCandidate {
    RuleId rule;
    Literal literal;
    std::vector<FactId> premises;
    std::string description;
};

// A knowledge base session: entities, individuals, directions, facts and the
// saturation engine. Copyable; a copy is an independent snapshot.
class Kb {
public:
    Kb();

    Options& options() { return options_; }
    const Options& options() const { return options_; }

    // ---- kb-core -------------------------------------------------------
    EntityId declare_entity(const std::string& name, EntityClass cls, const Attributes& attrs = {});
    EntityId plural_sum(EntityId x, EntityId y);
    void assert_is_coll(EntityId x, EntityId y);
    void assert_quantity(EntityId x, EntityId y);
    EntityId quantity_sum(EntityId x, EntityId z);  // A40, materialized on demand
    EntityId interior_of(EntityId x);                // A49
    EntityId rest_of(EntityId whole, EntityId part); // the whole minus the part
    std::optional<EntityId> find_entity(const std::string& name) const;
    const Entity& entity(EntityId id) const { return ents_.get(ents_.canon(id)); }
    EntityId canon_entity(EntityId id) const { return ents_.canon(id); }
    std::vector<EntityId> entity_ids() const;  // canonical, declaration order
    const EntityStore& entities() const { return ents_; }
    EntityStore& entities_mut() { return ents_; }

    // ---- individuals and directions ------------------------------------
    IndId sref(EntityId e);
    IndId construct_sum(const std::vector<IndId>& parts);
    IndId construct_inter(IndId a, IndId b);  // A7: needs O(a,b) entailed
    IndId construct_compl(IndId a);
    IndId construct_interior(IndId a);
    IndId construct_closure(IndId a);
    IndId construct_skolem(const std::string& tag, const std::vector<IndId>& args);
    IndId universal() const { return terms_.universal(); }
    const TermStore& terms() const { return terms_; }
    std::vector<IndId> individuals() const;  // canonical representatives

    DirId declare_direction(const std::string& name) {
        clean_ = false;
        return dirs_.declare(name);
    }
    std::optional<DirId> find_direction(const std::string& name) const;
    DirId opposite(DirId d) const { return dirs_.opposite(d); }
    DirId haut() const { return dirs_.haut(); }
    DirId bas() const { return dirs_.bas(); }
    const DirStore& dirs() const { return dirs_; }
    std::vector<DirId> directions() const;  // canonical representatives of all ids

    // ---- facts ----------------------------------------------------------
    FactId assert_literal(const Literal& lit, const std::string& note = {});
    void add_assumption(const Literal& lit, const std::string& note = {});
    Atom canonical(const Atom& a) const;
    Atom to_atom(const Literal& lit);  // builds terms implied by the literal
    Status status(const Atom& a, bool positive = true) const;
    std::optional<FactId> lookup(const Atom& a, bool positive) const;
    std::optional<FactId> allen_fact(IndId x, IndId y, DirId d) const;
    AllenSet allen_mask(IndId x, IndId y, DirId d) const;
    const Fact& fact(FactId id) const { return store_[id]; }
    size_t fact_count() const { return store_.size(); }
    std::vector<FactId> facts_of(Rel r, bool positive) const;
    std::vector<FactId> facts_with(Rel r, bool positive, int pos, uint32_t arg) const;

    // Rule-side derivation. Returns the id of the (new or existing) fact, or kNone on conflict.
    FactId derive(const Atom& a, bool positive, RuleId rule, std::initializer_list<FactId> premises,
                  std::string note = {});
    FactId derive_v(const Atom& a, bool positive, RuleId rule, const std::vector<FactId>& premises,
                    std::string note = {});
    FactId derive_allen(IndId x, IndId y, DirId d, AllenSet s, RuleId rule,
                        const std::vector<FactId>& premises, std::string note = {});
    void record_conflict(FactId pos, FactId neg, const std::string& axiom, const std::string& message);
    void record_violation(const std::string& axiom, const std::string& message, SourceLoc loc = {});

    // ---- engine ---------------------------------------------------------
    SaturationResult saturate(const SaturationLimits& limits = {});
    bool saturated() const { return clean_; }
    Verdict query(const Literal& lit, const SaturationLimits& limits = {});
    ProofHandle handle(FactId f) const { return {uid_, generation_, f}; }
    // Throws KbError on a stale handle.
    FactId resolve(const ProofHandle& h) const;
    const std::vector<Conflict>& conflicts() const { return store_.conflicts(); }
    const std::vector<Violation>& violations() const { return violations_; }
    const SaturationLimits& limits() const { return limits_; }
    uint64_t uid() const { return uid_; }

    // ---- printing -------------------------------------------------------
    std::string ind_str(IndId x) const;
    std::string dir_str(DirId d) const;
    std::string ent_str(EntityId e) const;
    std::string atom_str(const Atom& a, bool positive = true) const;
    std::string literal_str(const Literal& lit) const;

    // Used by rule modules.
    int depth_limit() const { return limits_.depth; }
    void note_term_created() { terms_dirty_ = true; }
    void merge_individuals(IndId a, IndId b);
    void merge_directions(DirId a, DirId b);
    void merge_entities(EntityId a, EntityId b);
    std::vector<DefaultCandidate>& default_candidates() { return default_candidates_; }
    void add_default_candidate(DefaultCandidate c);
    // Individuals that take part in distance reasoning; A15/A19 range over these.
    void touch_distance(IndId x);
    bool in_distance(IndId x) const;
    std::vector<IndId> distance_domain() const;
    // Entities whose spatial referent is x.
    std::vector<EntityId> entities_at(IndId x) const;
    std::optional<IndId> sref_of(EntityId e) const;
    void enqueue(FactId f) { agenda_.push_back(f); }
    bool has_class(EntityId e, Rel cls) const;
    std::optional<EntityClass> class_of(EntityId e) const;

private:
    void run_agenda();
    void fire(FactId id);
    void rekey_all();
    bool closure_pass(bool negative);
    bool closure_loop();
    void default_layer(SaturationResult& result);
    void integrity_checks();
    FactId insert_fact(Fact f);
    std::vector<uint32_t> defaults_of(const std::vector<FactId>& premises) const;

    Options options_;
    SaturationLimits limits_;
    EntityStore ents_;
    TermStore terms_;
    DirStore dirs_;
    FactStore store_;
    std::deque<FactId> agenda_;
    size_t processed_terms_ = 0;
    size_t processed_dirs_ = 0;
    size_t derived_ = 0;
    bool budget_hit_ = false;
    bool clean_ = false;
    bool terms_dirty_ = false;
    bool need_rekey_ = false;
    std::vector<Violation> violations_;
    std::vector<DefaultCandidate> default_candidates_;
    std::vector<IndId> dist_raw_;
    std::vector<Literal> assumptions_;
    std::vector<std::string> assumption_notes_;
    std::vector<std::string> defaults_applied_;
    std::vector<std::string> defaults_blocked_;
    uint64_t uid_;
    uint64_t generation_ = 0;
    uint32_t next_default_ = 0;

};

// Rule modules, dispatched per fact.
void fire_geometry(Kb& kb, FactId id);
void fire_distance(Kb& kb, FactId id);
void fire_direction(Kb& kb, FactId id);
void fire_allen(Kb& kb, FactId id);
void fire_kb(Kb& kb, FactId id);
void fire_functional(Kb& kb, FactId id);
// Constructor axioms for a freshly created individual term.
void term_axioms(Kb& kb, IndId t);
// Seeds for a freshly seen direction id.
void direction_axioms(Kb& kb, DirId d);
// Entity-level rules triggered when a new entity appears.
void entity_axioms(Kb& kb, EntityId e);

}  // namespace topos
