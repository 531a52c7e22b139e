#include "topos/engine.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "topos/query.hpp"

namespace topos {

namespace {
std::atomic<uint64_t> g_next_uid{1};
}

std::string SourceLoc::str() const {
    std::string out = file.empty() ? "<input>" : file;
    return out + ":" + std::to_string(line) + ":" + std::to_string(col);
}

Kb::Kb() : uid_(g_next_uid++) {}

// ---------------------------------------------------------------- terms ---

IndId Kb::sref(EntityId e) {
    if (auto t = sref_of(e)) return *t;
    e = ents_.canon(e);
    clean_ = false;
    return terms_.atom(e);
}

IndId Kb::construct_sum(const std::vector<IndId>& parts) {
    clean_ = false;
    return terms_.sum(parts, limits_.depth);
}

IndId Kb::construct_inter(IndId a, IndId b) {
    if (terms_.canon(a) != terms_.canon(b) && status(make_atom(Rel::O, a, b)) != Status::Entailed)
        throw TermError("A7: inter(" + ind_str(a) + ", " + ind_str(b) + ") needs O entailed");
    clean_ = false;
    return terms_.inter(a, b, limits_.depth);
}

IndId Kb::construct_compl(IndId a) {
    clean_ = false;
    return terms_.compl_of(a, limits_.depth);
}

IndId Kb::construct_interior(IndId a) {
    clean_ = false;
    return terms_.interior(a, limits_.depth);
}

IndId Kb::construct_closure(IndId a) {
    clean_ = false;
    return terms_.closure(a, limits_.depth);
}

IndId Kb::construct_skolem(const std::string& tag, const std::vector<IndId>& args) {
    clean_ = false;
    return terms_.skolem(tag, args, limits_.depth);
}

std::vector<IndId> Kb::individuals() const { return terms_.representatives(); }

std::optional<DirId> Kb::find_direction(const std::string& name) const {
    if (name == "haut") return dirs_.haut();
    if (name == "bas") return dirs_.bas();
    return dirs_.find(name);
}

std::vector<DirId> Kb::directions() const { return dirs_.representatives(); }

std::vector<EntityId> Kb::entity_ids() const { return ents_.representatives(); }

void Kb::merge_individuals(IndId a, IndId b) {
    if (terms_.canon(a) == terms_.canon(b)) return;
    terms_.merge(a, b);
    need_rekey_ = true;
}

void Kb::merge_directions(DirId a, DirId b) {
    if (dirs_.merge(a, b)) need_rekey_ = true;
}

void Kb::merge_entities(EntityId a, EntityId b) {
    if (ents_.merge(a, b)) need_rekey_ = true;
}

void Kb::touch_distance(IndId x) {
    if (in_distance(x)) return;
    dist_raw_.push_back(x);
    clean_ = false;
    // seed A11 for the new member and refire the facts A15-A19 read
    for (IndId y : distance_domain()) {
        derive(make_atom(Rel::Closer, x, y, y), false, RuleId::A11, {});
        if (terms_.canon(y) == terms_.canon(x)) continue;
        derive(make_atom(Rel::Closer, y, x, x), false, RuleId::A11, {});
        // C(x,x) with A15: nothing is closer to x than x itself
        derive(make_atom(Rel::Closer, x, y, x), false, RuleId::A15, {});
        derive(make_atom(Rel::Closer, y, x, y), false, RuleId::A15, {});
    }
    for (Rel r : {Rel::C, Rel::P, Rel::WCont})
        for (bool pos : {true, false})
            for (FactId f : store_.by_rel(r, pos)) agenda_.push_back(f);
}

bool Kb::in_distance(IndId x) const {
    x = terms_.canon(x);
    for (IndId y : dist_raw_)
        if (terms_.canon(y) == x) return true;
    return false;
}

std::vector<IndId> Kb::distance_domain() const {
    std::vector<IndId> out;
    for (IndId y : dist_raw_) out.push_back(terms_.canon(y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EntityId> Kb::entities_at(IndId x) const {
    x = terms_.canon(x);
    std::vector<EntityId> out;
    for (EntityId e : ents_.representatives()) {
        auto t = terms_.atom_of(e);
        if (!t) {
            for (EntityId raw = 0; raw < ents_.size() && !t; ++raw)
                if (ents_.canon(raw) == e) t = terms_.atom_of(raw);
        }
        if (t && terms_.canon(*t) == x) out.push_back(e);
    }
    return out;
}

std::optional<IndId> Kb::sref_of(EntityId e) const {
    e = ents_.canon(e);
    for (EntityId raw = 0; raw < ents_.size(); ++raw)
        if (ents_.canon(raw) == e)
            if (auto t = terms_.atom_of(raw)) return terms_.canon(*t);
    return std::nullopt;
}

void Kb::add_default_candidate(DefaultCandidate c) {
    for (const auto& d : default_candidates_)
        if (d.description == c.description) return;
    default_candidates_.push_back(std::move(c));
}

// ---------------------------------------------------------------- facts ---

Atom Kb::canonical(const Atom& a) const {
    Atom out = a;
    const auto& sig = rel_info(a.rel).sig;
    for (size_t i = 0; i < sig.size(); ++i) {
        if (out.a[i] == kNone) continue;
        switch (sig[i]) {
        case Sort::Entity: out.a[i] = ents_.canon(out.a[i]); break;
        case Sort::Individual: out.a[i] = terms_.canon(out.a[i]); break;
        case Sort::Direction: out.a[i] = dirs_.canon(out.a[i]); break;
        }
    }
    return out;
}

Atom Kb::to_atom(const Literal& lit) {
    if (lit.args.size() != size_t(arity(lit.rel)))
        throw KbError(std::string(rel_name(lit.rel)) + " expects " + std::to_string(arity(lit.rel)) +
                      " arguments, got " + std::to_string(lit.args.size()));
    Atom a;
    a.rel = lit.rel;
    for (size_t i = 0; i < lit.args.size(); ++i) a.a[i] = lit.args[i];
    if (lit.rel == Rel::Allen) a.mask = lit.mask.bits();
    return canonical(a);
}

std::optional<FactId> Kb::lookup(const Atom& a, bool positive) const {
    Atom c = canonical(a);
    if (c.rel == Rel::Allen) {
        auto best = store_.allen_best(c.a[0], c.a[1], c.a[2]);
        if (!best) return std::nullopt;
        AllenSet m(store_[*best].atom.mask);
        AllenSet want(c.mask);
        if (positive ? m.subset_of(want) : (m & want).empty()) return best;
        return std::nullopt;
    }
    auto f = store_.find(c, positive);
    if (f && store_[*f].alias_of != kNone) return store_[*f].alias_of;
    return f;
}

Status Kb::status(const Atom& a, bool positive) const {
    if (lookup(a, positive)) return Status::Entailed;
    if (lookup(a, !positive)) return Status::Refuted;
    return Status::Unknown;
}

std::optional<FactId> Kb::allen_fact(IndId x, IndId y, DirId d) const {
    return store_.allen_best(terms_.canon(x), terms_.canon(y), dirs_.canon(d));
}

AllenSet Kb::allen_mask(IndId x, IndId y, DirId d) const {
    if (terms_.canon(x) == terms_.canon(y)) return AllenSet(AllenRel::Equal);
    if (auto f = allen_fact(x, y, d)) return AllenSet(store_[*f].atom.mask);
    return AllenSet::all();
}

std::vector<FactId> Kb::facts_of(Rel r, bool positive) const { return store_.by_rel(r, positive); }

std::vector<FactId> Kb::facts_with(Rel r, bool positive, int pos, uint32_t arg) const {
    const auto& sig = rel_info(r).sig;
    uint32_t c = arg;
    switch (sig[size_t(pos)]) {
    case Sort::Entity: c = ents_.canon(arg); break;
    case Sort::Individual: c = terms_.canon(arg); break;
    case Sort::Direction: c = dirs_.canon(arg); break;
    }
    return store_.by_arg(r, positive, pos, c);
}

std::vector<uint32_t> Kb::defaults_of(const std::vector<FactId>& premises) const {
    std::vector<uint32_t> out;
    for (FactId p : premises) {
        if (p == kNone) continue;
        const auto& d = store_[p].defaults;
        out.insert(out.end(), d.begin(), d.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FactId Kb::insert_fact(Fact f) {
    FactId id = store_.insert(std::move(f));
    agenda_.push_back(id);
    clean_ = false;
    return id;
}

FactId Kb::derive(const Atom& a, bool positive, RuleId rule, std::initializer_list<FactId> premises,
                  std::string note) {
    return derive_v(a, positive, rule, std::vector<FactId>(premises), std::move(note));
}

FactId Kb::derive_v(const Atom& a, bool positive, RuleId rule, const std::vector<FactId>& premises,
                    std::string note) {
    Atom c = canonical(a);
    if (c.rel == Rel::Allen) {
        AllenSet s(c.mask);
        if (!positive) s = ~s;
        return derive_allen(c.a[0], c.a[1], c.a[2], s, rule, premises, std::move(note));
    }
    if (auto same = store_.find(c, positive)) {
        FactId f = *same;
        return store_[f].alias_of != kNone ? store_[f].alias_of : f;
    }
    if (budget_hit_) return kNone;
    if (rule != RuleId::Asserted && ++derived_ > limits_.budget) {
        budget_hit_ = true;
        return kNone;
    }
    Fact f;
    f.atom = c;
    f.positive = positive;
    f.rule = rule;
    f.premises = premises;
    f.defaults = defaults_of(premises);
    f.note = std::move(note);
    const auto kind = rule_info(rule).kind;
    f.layer = rule == RuleId::Asserted ? Layer::Asserted
              : kind == RuleKind::Closure ? Layer::Closure
              : kind == RuleKind::Default ? Layer::Default
                                          : Layer::Monotone;
    auto other = store_.find(c, !positive);
    FactId id = insert_fact(std::move(f));
    if (other) {
        FactId o = store_[*other].alias_of != kNone ? store_[*other].alias_of : *other;
        record_conflict(positive ? id : o, positive ? o : id, "", "");
    }
    return id;
}

FactId Kb::derive_allen(IndId x, IndId y, DirId d, AllenSet s, RuleId rule,
                        const std::vector<FactId>& premises, std::string note) {
    x = terms_.canon(x);
    y = terms_.canon(y);
    d = dirs_.canon(d);
    if (s.is_all()) return kNone;
    if (x == y) {
        if (s.has(AllenRel::Equal)) return kNone;
        Atom self = make_allen(x, y, d, s);
        if (store_.find(self, true)) return kNone;
        Fact f;
        f.atom = self;
        f.rule = rule;
        f.premises = premises;
        f.defaults = defaults_of(premises);
        f.note = std::move(note);
        FactId id = store_.insert(std::move(f));
        record_conflict(id, kNone, "Allen", "an individual stands in = to itself, not " + s.str());
        return kNone;
    }
    auto best = store_.allen_best(x, y, d);
    AllenSet cur = best ? AllenSet(store_[*best].atom.mask) : AllenSet::all();
    AllenSet next = cur & s;
    if (best && next == cur) return *best;
    if (budget_hit_) return kNone;
    if (rule != RuleId::Asserted && ++derived_ > limits_.budget) {
        budget_hit_ = true;
        return kNone;
    }
    Atom atom = make_allen(x, y, d, s);
    FactId own;
    if (auto same = store_.find(atom, true)) {
        own = *same;
    } else {
        Fact f;
        f.atom = atom;
        f.rule = rule;
        f.premises = premises;
        f.defaults = defaults_of(premises);
        f.note = std::move(note);
        f.layer = rule == RuleId::Asserted ? Layer::Asserted : Layer::Monotone;
        own = store_.insert(std::move(f));
        clean_ = false;
    }
    if (!best) {
        store_.set_allen_best(own);
        agenda_.push_back(own);
        return own;
    }
    if (next.empty()) {
        record_conflict(own, *best, "Allen",
                        "Allen relations " + s.str() + " and " + cur.str() + " are disjoint");
        return kNone;
    }
    if (next == s) {
        store_.set_allen_best(own);
        agenda_.push_back(own);
        return own;
    }
    Atom met = make_allen(x, y, d, next);
    if (auto same = store_.find(met, true)) {
        store_.set_allen_best(*same);
        return *same;
    }
    Fact m;
    m.atom = met;
    m.rule = RuleId::AllenMeet;
    m.premises = {*best, own};
    m.defaults = defaults_of(m.premises);
    m.note = cur.glyph() + " n " + s.glyph() + " = " + next.glyph();
    FactId id = store_.insert(std::move(m));
    store_.set_allen_best(id);
    agenda_.push_back(id);
    clean_ = false;
    return id;
}

void Kb::record_conflict(FactId pos, FactId neg, const std::string& axiom, const std::string& message) {
    Conflict c;
    c.positive = pos;
    c.negative = neg;
    std::set<std::string> labels;
    for (FactId f : {pos, neg}) {
        if (f == kNone) continue;
        RuleId r = store_[f].rule;
        if (r != RuleId::Asserted && r != RuleId::Assumed) labels.insert(std::string(rule_info(r).label));
    }
    if (!axiom.empty()) labels.insert(axiom);
    for (const auto& l : labels) c.axiom += (c.axiom.empty() ? "" : ", ") + l;
    if (c.axiom.empty()) c.axiom = "contradictory assertions";
    c.message = message.empty() && pos != kNone && neg != kNone
                    ? atom_str(store_[pos].atom, true) + " vs " + atom_str(store_[neg].atom, false)
                    : message;
    store_.conflicts().push_back(std::move(c));
}

void Kb::record_violation(const std::string& axiom, const std::string& message, SourceLoc loc) {
    violations_.push_back({axiom, message, std::move(loc)});
}

FactId Kb::assert_literal(const Literal& lit, const std::string& note) {
    Atom a = to_atom(lit);
    return derive(a, lit.positive, RuleId::Asserted, {}, note);
}

void Kb::add_assumption(const Literal& lit, const std::string& note) {
    to_atom(lit);
    assumptions_.push_back(lit);
    assumption_notes_.push_back(note);
    clean_ = false;
}

FactId Kb::resolve(const ProofHandle& h) const {
    if (h.kb != uid_ || h.generation != generation_ || h.fact >= store_.size())
        throw KbError("stale proof id");
    return h.fact;
}

bool Kb::has_class(EntityId e, Rel cls) const {
    return status(make_atom(cls, e)) == Status::Entailed;
}

std::optional<EntityClass> Kb::class_of(EntityId e) const {
    for (EntityClass c : {EntityClass::Obj, EntityClass::Mat, EntityClass::Subst, EntityClass::Loc,
                          EntityClass::SpPort})
        if (has_class(e, class_rel(c))) return c;
    if (entity(e).cls == EntityClass::Plural) return EntityClass::Plural;
    return std::nullopt;
}

// ----------------------------------------------------------- saturation ---

void Kb::fire(FactId id) {
    const Fact& f = store_[id];
    if (f.alias_of != kNone) return;
    if (f.atom.rel == Rel::Allen) {
        auto best = store_.allen_best(f.atom.a[0], f.atom.a[1], f.atom.a[2]);
        if (!best || *best != id) return;
    }
    fire_geometry(*this, id);
    fire_distance(*this, id);
    fire_direction(*this, id);
    fire_allen(*this, id);
    fire_kb(*this, id);
    fire_functional(*this, id);
}

void Kb::rekey_all() {
    need_rekey_ = false;
    auto clashes = store_.rekey([this](const Atom& a) { return canonical(a); });
    for (auto [a, b] : clashes) {
        FactId pos = store_[a].positive ? a : b;
        FactId neg = store_[a].positive ? b : a;
        record_conflict(pos, neg, "", "");
    }
    // rebuild Allen bests from scratch, then refire everything under the new keys
    agenda_.clear();
    for (FactId id = 0; id < store_.size(); ++id) {
        const Fact& f = store_[id];
        if (f.alias_of != kNone) continue;
        if (f.atom.rel == Rel::Allen) {
            auto best = store_.allen_best(f.atom.a[0], f.atom.a[1], f.atom.a[2]);
            if (!best) {
                store_.set_allen_best(id);
            } else {
                AllenSet cur(store_[*best].atom.mask);
                AllenSet mine(f.atom.mask);
                if (mine.subset_of(cur)) store_.set_allen_best(id);
                else if (!cur.subset_of(mine))
                    derive_allen(f.atom.a[0], f.atom.a[1], f.atom.a[2], mine, f.rule, f.premises);
            }
        }
        agenda_.push_back(id);
    }
}

void Kb::run_agenda() {
    while (true) {
        while (processed_terms_ < terms_.size()) {
            IndId t = IndId(processed_terms_++);
            term_axioms(*this, t);
        }
        while (processed_dirs_ < dirs_.size()) direction_axioms(*this, DirId(processed_dirs_++));
        if (need_rekey_) rekey_all();
        if (agenda_.empty() || budget_hit_) break;
        FactId id = agenda_.front();
        agenda_.pop_front();
        fire(id);
    }
}

SaturationResult Kb::saturate(const SaturationLimits& limits) {
    if (limits.depth <= 0 || limits.budget == 0) throw KbError("saturation limits must be positive");
    limits_ = limits;
    derived_ = 0;
    budget_hit_ = false;
    SaturationResult result;
    size_t before = store_.size();
    closure_loop();
    if (limits.defaults && !budget_hit_) default_layer(result);
    integrity_checks();
    result.facts = store_.size();
    result.derived = store_.size() - before;
    result.partial = budget_hit_;
    result.conflicts = store_.conflicts().size() + violations_.size();
    result.defaults_applied = defaults_applied_;
    result.defaults_blocked = defaults_blocked_;
    clean_ = !budget_hit_;
    return result;
}

bool Kb::closure_loop() {
    size_t before = store_.size();
    for (int round = 0; round < 64 && !budget_hit_; ++round) {
        run_agenda();
        if (closure_pass(false)) continue;
        run_agenda();
        if (closure_pass(true)) continue;
        break;
    }
    run_agenda();
    return store_.size() != before;
}

void Kb::default_layer(SaturationResult& result) {
    std::set<std::string> decided;
    for (const auto& s : defaults_applied_) decided.insert(s);
    for (const auto& s : defaults_blocked_) decided.insert(s.substr(0, s.find(" [blocked")));
    for (int round = 0; round < 32; ++round) {
        std::vector<DefaultCandidate> cands;
        for (size_t i = 0; i < assumptions_.size(); ++i)
            cands.push_back({RuleId::Assumed, assumptions_[i], {}, "assume " + literal_str(assumptions_[i])});
        for (const auto& c : default_candidates_) cands.push_back(c);
        bool progressed = false;
        for (const auto& cand : cands) {
            if (decided.count(cand.description)) continue;
            decided.insert(cand.description);
            progressed = true;
            Atom a = to_atom(cand.literal);
            bool pos = cand.literal.positive;
            if (auto blocker = lookup(a, !pos)) {
                defaults_blocked_.push_back(cand.description + " [blocked by " +
                                            atom_str(store_[*blocker].atom, store_[*blocker].positive) + "]");
                continue;
            }
            if (lookup(a, pos)) continue;
            Kb backup = *this;
            size_t nconf = store_.conflicts().size();
            Fact f;
            f.atom = canonical(a);
            f.positive = pos;
            if (a.rel == Rel::Allen && !pos) {
                f.atom.mask = (~AllenSet(a.mask)).bits();
                f.positive = true;
            }
            f.rule = cand.rule;
            f.premises = cand.premises;
            f.defaults = defaults_of(cand.premises);
            f.defaults.push_back(next_default_++);
            f.layer = Layer::Default;
            f.note = cand.description;
            if (f.atom.rel == Rel::Allen) {
                derive_allen(f.atom.a[0], f.atom.a[1], f.atom.a[2], AllenSet(f.atom.mask), cand.rule,
                             cand.premises, cand.description);
            } else {
                insert_fact(std::move(f));
            }
            closure_loop();
            if (store_.conflicts().size() > nconf) {
                std::string why = store_.conflicts()[nconf].message;
                auto applied = defaults_applied_;
                auto blocked = defaults_blocked_;
                uint64_t gen = generation_;
                uint32_t next = next_default_;
                *this = std::move(backup);
                generation_ = gen + 1;
                next_default_ = next;
                defaults_applied_ = applied;
                defaults_blocked_ = blocked;
                defaults_blocked_.push_back(cand.description + " [blocked: " + why + "]");
            } else {
                defaults_applied_.push_back(cand.description);
            }
        }
        if (!progressed) break;
    }
    (void)result;
}

void Kb::integrity_checks() {
    // A47 only applies to scenes that declare their stabilisation graph closed.
    if (!options_.closed_stabilization) return;
    for (EntityId x : entity_ids()) {
        const Entity& e = entity(x);
        if (e.cls != EntityClass::Obj && e.cls != EntityClass::Mat) continue;
        if (e.attrs.intrinsic_stabilizer.value_or(false)) continue;
        if (status(make_atom(Rel::IntrinsicStabilizer, x)) == Status::Entailed) continue;
        bool supported = false;
        for (FactId f : facts_with(Rel::Stabilise, true, 1, x)) {
            EntityId y = store_[f].atom.a[0];
            if (y == ents_.canon(x)) continue;
            IndId sy = terms_.atom_of(y).value_or(kNone);
            IndId sx = terms_.atom_of(ents_.canon(x)).value_or(kNone);
            if (sy == kNone || sx == kNone) continue;
            // contact in either direction; WCont is not symmetric by definition
            if (status(make_atom(Rel::Cont, sy, sx)) == Status::Entailed ||
                status(make_atom(Rel::Cont, sx, sy)) == Status::Entailed)
                supported = true;
        }
        if (supported) continue;
        std::string msg = "A47: " + e.name + " is not an intrinsic stabiliser and no contacting entity stabilises it";
        bool seen = false;
        for (const auto& c : store_.conflicts()) seen |= c.message == msg;
        if (!seen) store_.conflicts().push_back({kNone, kNone, "A47", msg});
    }
}

// ----------------------------------------------------------------- query ---

Verdict Kb::query(const Literal& lit, const SaturationLimits& limits) {
    prepare_query(*this, lit);
    if (!clean_ || limits.depth != limits_.depth || limits.budget != limits_.budget ||
        limits.defaults != limits_.defaults)
        saturate(limits);
    return evaluate(*this, lit);
}

// -------------------------------------------------------------- printing ---

std::string Kb::ent_str(EntityId e) const { return entity(e).name; }

std::string Kb::dir_str(DirId d) const { return dirs_.name(dirs_.canon(d)); }

std::string Kb::ind_str(IndId x) const {
    x = terms_.canon(x);
    const Term& t = terms_.term(x);
    auto list = [&](const std::vector<IndId>& args) {
        std::string out;
        for (size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + ind_str(args[i]);
        return out;
    };
    switch (t.kind) {
    case TermKind::Atom: return ent_str(t.entity);
    case TermKind::Universal: return "univ";
    case TermKind::Sum: return "sum(" + list(t.args) + ")";
    case TermKind::Inter: return "inter(" + list(t.args) + ")";
    case TermKind::Compl: return "compl(" + list(t.args) + ")";
    case TermKind::Interior: return "i(" + list(t.args) + ")";
    case TermKind::Closure: return "c(" + list(t.args) + ")";
    case TermKind::Skolem: return t.tag + "(" + list(t.args) + ")";
    }
    return "?";
}

std::string Kb::atom_str(const Atom& a, bool positive) const {
    std::string out = positive ? "" : "not ";
    out += rel_name(a.rel);
    if (a.rel == Rel::Allen) out += AllenSet(a.mask).str();
    out += "(";
    const auto& sig = rel_info(a.rel).sig;
    for (size_t i = 0; i < sig.size(); ++i) {
        if (i) out += ", ";
        switch (sig[i]) {
        case Sort::Entity: out += ent_str(a.a[i]); break;
        case Sort::Individual: out += ind_str(a.a[i]); break;
        case Sort::Direction: out += dir_str(a.a[i]); break;
        }
    }
    return out + ")";
}

std::string Kb::literal_str(const Literal& lit) const {
    Atom a;
    a.rel = lit.rel;
    a.mask = lit.mask.bits();
    for (size_t i = 0; i < lit.args.size() && i < 4; ++i) a.a[i] = lit.args[i];
    return atom_str(a, lit.positive);
}

}  // namespace topos
