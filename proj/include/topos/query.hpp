#pragma once
// Query preparation and evaluation over a saturated Kb.

#include "topos/engine.hpp"

namespace topos {

// Builds the terms and domain entries the literal needs before saturation.
void prepare_query(Kb& kb, const Literal& lit);

// Three-valued verdict. Definitions read over a closed domain (Stab_tot, DPt,
// Dans, Sur2/3) may be refuted here without a stored negative fact.
Verdict evaluate(Kb& kb, const Literal& lit);

}  // namespace topos
