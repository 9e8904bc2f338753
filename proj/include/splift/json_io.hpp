#pragma once

#include <string>

#include <json.hpp>

#include "splift/lfunctions.hpp"
#include "splift/lifting.hpp"
#include "splift/params.hpp"

namespace splift {

nlohmann::json datum_to_json(const CuspidalDatum& tau);
CuspidalDatum datum_from_json(const nlohmann::json& j);

nlohmann::json param_to_json(const GlobalAParameter& psi);
GlobalAParameter param_from_json(const nlohmann::json& j);
GlobalAParameter load_parameter(const std::string& path);

nlohmann::json lift_result_to_json(const LiftResult& r, const LiftSpec& spec);
LiftSpec lift_spec_from_json(const nlohmann::json& j);
nlohmann::json hecke_to_json(const HeckeData& h);

} // namespace splift
