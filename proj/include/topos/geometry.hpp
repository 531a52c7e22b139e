#pragma once
// Public evaluators for the geometric layer. Each one saturates the Kb if needed.

#include <string>
#include <vector>

#include "topos/engine.hpp"

namespace topos {

enum class ContactKind : uint8_t { EC, ICont, WCont, None, Unknown };
std::string_view contact_name(ContactKind k);

enum class BoundaryOp : uint8_t { Env, Contour, Ends };

Verdict eval_relation(Kb& kb, Rel rel, const std::vector<uint32_t>& args);
ContactKind classify_contact(Kb& kb, IndId x, IndId y);
// env(y), contour(y) or ends(y), with the matching Env/Contour/Ends fact.
IndId boundary(Kb& kb, BoundaryOp op, IndId y);
// k in 1..3: Lim1/Lim2/Lim3(x, y).
Status limit_check(Kb& kb, int k, IndId x, IndId y);
// "Surface", "Line", "Point" or "none".
std::string limit_kind(Kb& kb, IndId x, IndId y);
// Directions D for which Exts(y, z, x, D) is not refuted.
std::vector<DirId> dir_candidates(Kb& kb, IndId y, IndId z, IndId x);

}  // namespace topos
