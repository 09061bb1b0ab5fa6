#pragma once

#include <json.hpp>

#include "hamsep/embedding.hpp"
#include "hamsep/witness.hpp"

namespace hamsep {

inline constexpr int kJsonSchema = 1;

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const Lemma7Report& report);
// Stage sizes and sets, census numbers, condition witnesses and edge-choice results.
nlohmann::json to_json(const WitnessReport& report);

}  // namespace hamsep
