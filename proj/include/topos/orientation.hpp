#pragma once
// Evaluators for intrinsic orientation and the devant/derriere prepositions.

#include <optional>

#include "topos/engine.hpp"

namespace topos {

std::optional<DirId> eval_dir_ext(Kb& kb, EntityId y, EntityId z, EntityId x);
Verdict eval_orient_haut(Kb& kb, DirId d, EntityId x);
Verdict eval_orient_bas(Kb& kb, DirId d, EntityId x);
// case_tag names the Orient-avant1/2/3 case that holds.
Verdict eval_orient_avant(Kb& kb, DirId d, EntityId x);
Verdict eval_in_sp(Kb& kb, EntityId y, EntityId x, DirId d);
// Search over the known directions; the witness lists the directions that work.
Verdict eval_devant_i(Kb& kb, EntityId y, EntityId x);
Verdict eval_devant_d(Kb& kb, EntityId y, EntityId x);
Verdict eval_derriere_i(Kb& kb, EntityId y, EntityId x);
Verdict eval_derriere_d(Kb& kb, EntityId y, EntityId x);

}  // namespace topos
