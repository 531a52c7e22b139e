#pragma once
// Proof trees over the justification store.

#include <string>
#include <vector>

#include "json.hpp"
#include "topos/engine.hpp"

namespace topos {

// Indented derivation tree; shared sub-proofs are printed once and referenced by #id.
std::string explain_text(const Kb& kb, const ProofHandle& h);
nlohmann::json explain_json(const Kb& kb, const ProofHandle& h);
std::string explain_text(const Kb& kb, FactId f);
nlohmann::json explain_json(const Kb& kb, FactId f);

struct ReplayResult {
    bool ok = true;
    size_t steps = 0;
    std::string error;
};

// Structural replay: premises exist and precede their conclusion, leaves are
// asserted facts, constructor/postulate instances or premise-free axiom instances,
// and default dependencies are carried upward.
ReplayResult replay(const Kb& kb, FactId f);

// Distinct rule labels used in the proof of f, in first-use order.
std::vector<std::string> rules_used(const Kb& kb, FactId f);
// Allen composition notes ("mi> ; mi> -> >") found in the proof of f.
std::vector<std::string> composition_steps(const Kb& kb, FactId f);

// Human-readable rule listing keyed by axiom/definition ids.
std::string dump_rules();
nlohmann::json dump_rules_json();

}  // namespace topos
