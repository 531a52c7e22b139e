#include "topos/proof.hpp"

#include <functional>
#include <set>

namespace topos {

namespace {

std::string node_line(const Kb& kb, FactId id) {
    const Fact& f = kb.fact(id);
    const RuleInfo& r = rule_info(f.rule);
    std::string out = "#" + std::to_string(id) + " " + kb.atom_str(f.atom, f.positive) + "  [" + std::string(r.label);
    if (r.kind != RuleKind::Asserted) out += ", " + std::string(rule_kind_name(r.kind));
    out += "]";
    if (!f.note.empty()) out += "  -- " + f.note;
    return out;
}

void walk(const Kb& kb, FactId root, const std::function<void(FactId)>& visit) {
    std::set<FactId> seen;
    std::vector<FactId> stack{root};
    while (!stack.empty()) {
        FactId id = stack.back();
        stack.pop_back();
        if (id == kNone || !seen.insert(id).second) continue;
        visit(id);
        const auto& p = kb.fact(id).premises;
        for (auto it = p.rbegin(); it != p.rend(); ++it) stack.push_back(*it);
    }
}

}  // namespace

std::string explain_text(const Kb& kb, FactId root) {
    std::string out;
    std::set<FactId> shown;
    std::function<void(FactId, int)> rec = [&](FactId id, int depth) {
        std::string pad(size_t(depth) * 2, ' ');
        if (shown.count(id)) {
            out += pad + "#" + std::to_string(id) + " (shown above)\n";
            return;
        }
        shown.insert(id);
        out += pad + node_line(kb, id) + "\n";
        for (FactId p : kb.fact(id).premises)
            if (p != kNone) rec(p, depth + 1);
    };
    rec(root, 0);
    return out;
}

nlohmann::json explain_json(const Kb& kb, FactId root) {
    std::set<FactId> shown;
    std::function<nlohmann::json(FactId)> rec = [&](FactId id) {
        const Fact& f = kb.fact(id);
        const RuleInfo& r = rule_info(f.rule);
        nlohmann::json j;
        j["id"] = id;
        j["literal"] = kb.atom_str(f.atom, f.positive);
        if (shown.count(id)) {
            j["ref"] = true;
            return j;
        }
        shown.insert(id);
        j["rule"] = std::string(r.label);
        j["rule_name"] = std::string(r.name);
        j["kind"] = std::string(rule_kind_name(r.kind));
        if (!f.note.empty()) j["note"] = f.note;
        if (!f.defaults.empty()) j["defaults"] = f.defaults;
        nlohmann::json prem = nlohmann::json::array();
        for (FactId p : f.premises)
            if (p != kNone) prem.push_back(rec(p));
        j["premises"] = prem;
        return j;
    };
    return rec(root);
}

std::string explain_text(const Kb& kb, const ProofHandle& h) { return explain_text(kb, kb.resolve(h)); }
nlohmann::json explain_json(const Kb& kb, const ProofHandle& h) { return explain_json(kb, kb.resolve(h)); }

ReplayResult replay(const Kb& kb, FactId root) {
    ReplayResult res;
    if (root >= kb.fact_count()) {
        res.ok = false;
        res.error = "no such fact #" + std::to_string(root);
        return res;
    }
    walk(kb, root, [&](FactId id) {
        if (!res.ok) return;
        ++res.steps;
        const Fact& f = kb.fact(id);
        const RuleInfo& r = rule_info(f.rule);
        std::set<uint32_t> carried;
        for (FactId p : f.premises) {
            if (p == kNone) continue;
            if (p >= id) {
                res.ok = false;
                res.error = "premise #" + std::to_string(p) + " does not precede #" + std::to_string(id);
                return;
            }
            for (uint32_t d : kb.fact(p).defaults) carried.insert(d);
        }
        for (uint32_t d : carried)
            if (std::find(f.defaults.begin(), f.defaults.end(), d) == f.defaults.end()) {
                res.ok = false;
                res.error = "#" + std::to_string(id) + " drops a default dependency";
                return;
            }
        if (f.premises.empty() && r.kind == RuleKind::Default && f.defaults.empty() && f.rule != RuleId::Assumed) {
            res.ok = false;
            res.error = "#" + std::to_string(id) + " is a default conclusion without a default marker";
        }
        if (f.layer == Layer::Monotone && !f.defaults.empty() && f.premises.empty()) {
            res.ok = false;
            res.error = "#" + std::to_string(id) + " monotone leaf carries defaults";
        }
    });
    return res;
}

std::vector<std::string> rules_used(const Kb& kb, FactId root) {
    std::vector<std::string> out;
    walk(kb, root, [&](FactId id) {
        std::string l(rule_info(kb.fact(id).rule).label);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    });
    return out;
}

std::vector<std::string> composition_steps(const Kb& kb, FactId root) {
    std::vector<std::string> out;
    walk(kb, root, [&](FactId id) {
        const Fact& f = kb.fact(id);
        if (f.rule == RuleId::AllenComp) out.push_back(f.note);
    });
    return out;
}

std::string dump_rules() {
    std::string out;
    for (const auto& r : all_rules()) {
        std::string label(r.label);
        label.resize(std::max<size_t>(label.size(), 16), ' ');
        std::string kind(rule_kind_name(r.kind));
        kind.resize(std::max<size_t>(kind.size(), 20), ' ');
        out += label + " " + kind + " " + std::string(r.statement) + "\n";
    }
    return out;
}

nlohmann::json dump_rules_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : all_rules())
        arr.push_back({{"id", std::string(r.label)},
                       {"name", std::string(r.name)},
                       {"kind", std::string(rule_kind_name(r.kind))},
                       {"statement", std::string(r.statement)}});
    return arr;
}

}  // namespace topos
