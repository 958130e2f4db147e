#pragma once

#include <json.hpp>

#include "ttlink/bounds.hpp"
#include "ttlink/diagram.hpp"
#include "ttlink/reduction.hpp"
#include "ttlink/roots.hpp"
#include "ttlink/tlink.hpp"

namespace ttlink {

using nlohmann::json;

void to_json(json& j, const RootSubset& subset);
void from_json(const json& j, RootSubset& subset);

void to_json(json& j, const TLinkStage& stage);
void from_json(const json& j, TLinkStage& stage);

void to_json(json& j, const TLinkSpec& spec);
void from_json(const json& j, TLinkSpec& spec);

void to_json(json& j, const ReducedModel& model);
void from_json(const json& j, ReducedModel& model);

void to_json(json& j, const FaceCensus& census);
void from_json(const json& j, FaceCensus& census);

void to_json(json& j, const PeripheralProfile& profile);

void to_json(json& j, const VolumeBound& bound);

}  // namespace ttlink
