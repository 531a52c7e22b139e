#pragma once
// JSON views of a Kb for the CLI.

#include "json.hpp"
#include "topos/engine.hpp"

namespace topos {

inline constexpr int kJsonFormat = 1;

nlohmann::json entities_json(const Kb& kb);
// derived=false keeps asserted facts only.
nlohmann::json facts_json(const Kb& kb, bool derived);
nlohmann::json conflicts_json(const Kb& kb);
nlohmann::json verdict_json(const Kb& kb, const Literal& lit, const Verdict& v);
nlohmann::json saturation_json(const SaturationResult& r);

}  // namespace topos
