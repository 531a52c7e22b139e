#pragma once
// Evaluators for sur (support) and dans (containment).

#include <optional>
#include <string>

#include "topos/engine.hpp"

namespace topos {

// The contact zone of x against y, once Cont(x, y) is entailed.
std::optional<IndId> zonecont(Kb& kb, IndId x, IndId y);
Status plus_haut(Kb& kb, IndId z1, IndId z2);
// "Cont1", "Cont2", "Cont3" or "none".
std::string cont_kind(Kb& kb, IndId x, IndId y);
Verdict stabilizes(Kb& kb, EntityId y, EntityId x);
Verdict stab_tot(Kb& kb, EntityId y, EntityId x);
// case_tag is "Sur1", "Sur2", "Sur3" or "none"; failed lists the first missing conjunct per case.
Verdict sur(Kb& kb, EntityId x, EntityId y);
Verdict tds(Kb& kb, EntityId x, EntityId y);
Verdict pds(Kb& kb, EntityId x, EntityId y);
Verdict dpt(Kb& kb, EntityId x, EntityId y);
Verdict dans(Kb& kb, EntityId x, EntityId y);

}  // namespace topos
