#include "topos/export.hpp"

#include "topos/proof.hpp"

namespace topos {

nlohmann::json entities_json(const Kb& kb) {
    nlohmann::json arr = nlohmann::json::array();
    for (EntityId id : kb.entity_ids()) {
        const Entity& e = kb.entity(id);
        nlohmann::json attrs = nlohmann::json::object();
        const auto& a = e.attrs;
        for (auto [flag, name] : {std::pair{a.can_use, "can_use"}, std::pair{a.in_use, "in_use"},
                                  std::pair{a.container, "container"}, std::pair{a.can_contain, "can_contain"},
                                  std::pair{a.speaker, "speaker"}, std::pair{a.complex_shape, "complex_shape"},
                                  std::pair{a.ground, "ground"}, std::pair{a.scattered, "scattered"},
                                  std::pair{a.surrounding, "surrounding"}})
            if (flag) attrs[name] = true;
        if (a.intrinsic_stabilizer) attrs["intrinsic_stabilizer"] = *a.intrinsic_stabilizer;
        if (a.hsize != SizeLevel::Unknown) attrs["hsize"] = std::string(size_name(a.hsize));
        if (a.vsize != SizeLevel::Unknown) attrs["vsize"] = std::string(size_name(a.vsize));
        if (!a.depend.empty()) attrs["depend"] = a.depend;
        if (!a.orient_gen.empty()) attrs["orient_gen"] = a.orient_gen;
        nlohmann::json j{{"id", id}, {"name", e.name}, {"class", std::string(class_name(e.cls))}, {"attributes", attrs}};
        if (e.interior_mode != InteriorMode::None) j["interior_mode"] = std::string(interior_mode_name(e.interior_mode));
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json facts_json(const Kb& kb, bool derived) {
    nlohmann::json arr = nlohmann::json::array();
    for (FactId id = 0; id < kb.fact_count(); ++id) {
        const Fact& f = kb.fact(id);
        if (f.alias_of != kNone) continue;
        if (!derived && f.rule != RuleId::Asserted) continue;
        if (f.atom.rel == Rel::Allen) {
            auto best = kb.allen_fact(f.atom.a[0], f.atom.a[1], f.atom.a[2]);
            if (!best || *best != id) continue;
        }
        nlohmann::json j{{"id", id},
                         {"literal", kb.atom_str(f.atom, f.positive)},
                         {"rule", std::string(rule_info(f.rule).label)}};
        if (!f.defaults.empty()) j["defeasible"] = true;
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json conflicts_json(const Kb& kb) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : kb.conflicts()) {
        nlohmann::json j{{"axiom", c.axiom}, {"message", c.message}};
        nlohmann::json just = nlohmann::json::array();
        for (FactId f : {c.positive, c.negative})
            if (f != kNone) just.push_back(explain_json(kb, f));
        j["justification"] = just;
        arr.push_back(j);
    }
    for (const auto& v : kb.violations())
        arr.push_back({{"axiom", v.axiom}, {"message", v.message}, {"location", v.loc.str()}});
    return arr;
}

nlohmann::json verdict_json(const Kb& kb, const Literal& lit, const Verdict& v) {
    nlohmann::json j{{"literal", kb.literal_str(lit)},
                     {"verdict", std::string(status_name(v.status))},
                     {"pragmatics", "not evaluated"}};
    if (!v.case_tag.empty()) j["case"] = v.case_tag;
    if (!v.failed.empty()) j["failed"] = v.failed;
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (v.proof.valid()) {
        j["proof_id"] = v.proof.fact;
        j["proof"] = explain_json(kb, v.proof.fact);
    }
    return j;
}

nlohmann::json saturation_json(const SaturationResult& r) {
    return {{"facts", r.facts},
            {"derived", r.derived},
            {"partial", r.partial},
            {"conflicts", r.conflicts},
            {"defaults_applied", r.defaults_applied},
            {"defaults_blocked", r.defaults_blocked}};
}

}  // namespace topos
