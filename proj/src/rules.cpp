#include "topos/rules.hpp"

namespace topos {

const std::vector<RuleInfo>& all_rules() {
    static const std::vector<RuleInfo> rules = {
#define TOPOS_RULE_INFO(e, l, k, s) RuleInfo{RuleId::e, #e, l, RuleKind::k, s},
        TOPOS_RULES(TOPOS_RULE_INFO)
#undef TOPOS_RULE_INFO
    };
    return rules;
}

const RuleInfo& rule_info(RuleId id) { return all_rules()[size_t(id)]; }

std::string_view rule_kind_name(RuleKind k) {
    switch (k) {
    case RuleKind::Asserted: return "asserted";
    case RuleKind::DefinitionForward: return "definition-forward";
    case RuleKind::DefinitionBackward: return "definition-backward";
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Theorem: return "theorem";
    case RuleKind::Constructor: return "constructor";
    case RuleKind::Postulate: return "postulate";
    case RuleKind::Closure: return "domain-closure";
    case RuleKind::Default: return "default";
    case RuleKind::Integrity: return "integrity";
    }
    return "?";
}

}  // namespace topos
