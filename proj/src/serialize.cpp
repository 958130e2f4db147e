#include "ttlink/serialize.hpp"

#include <algorithm>

namespace ttlink {

void to_json(json& j, const RootSubset& subset) {
  j = json{{"n", subset.strands}, {"J", subset.members}};
}

void from_json(const json& j, RootSubset& subset) {
  if (j.is_string()) {
    subset = parse_root(j.get<std::string>());
    return;
  }
  std::vector<int> members = j.at("J").get<std::vector<int>>();
  std::sort(members.begin(), members.end());
  subset = RootSubset(j.at("n").get<int>(), std::move(members));
}

void to_json(json& j, const TLinkStage& stage) {
  j = json{{"r", stage.r}, {"s", stage.s}, {"root", stage.root.members}};
}

void from_json(const json& j, TLinkStage& stage) {
  stage.r = j.at("r").get<long long>();
  stage.s = j.at("s").get<long long>();
  const int strands = static_cast<int>(std::max(stage.r, 2ll));
  if (!j.contains("root")) {
    stage.root = RootSubset::standard_bar(strands);
  } else if (j["root"].is_string()) {
    stage.root = parse_root(j["root"].get<std::string>(), strands);
  } else {
    std::vector<int> members = j["root"].get<std::vector<int>>();
    std::sort(members.begin(), members.end());
    stage.root = RootSubset(strands, std::move(members));
  }
}

void to_json(json& j, const TLinkSpec& spec) {
  j = json{{"p", spec.p}, {"q", spec.q}, {"stages", spec.stages}};
}

void from_json(const json& j, TLinkSpec& spec) {
  spec.p = j.at("p").get<long long>();
  spec.q = j.at("q").get<long long>();
  spec.stages.clear();
  if (j.contains("stages"))
    spec.stages = j["stages"].get<std::vector<TLinkStage>>();
}

void to_json(json& j, const ReducedModel& model) {
  j = json{{"n", model.n},       {"m", model.m},
           {"r", model.r},       {"s_prime", model.s_prime},
           {"cf", model.cf},     {"swapped", model.swapped}};
}

void from_json(const json& j, ReducedModel& model) {
  model.n = j.at("n").get<long long>();
  model.m = j.at("m").get<long long>();
  model.r = j.at("r").get<long long>();
  model.s_prime = j.at("s_prime").get<long long>();
  model.cf = j.at("cf").get<std::vector<long long>>();
  model.swapped = j.value("swapped", false);
}

void to_json(json& j, const FaceCensus& census) {
  j = json{{"B", census.bigons},
           {"T_p", census.triangles_peripheral},
           {"T_i", census.triangles_inner},
           {"Q_p", census.quads_peripheral},
           {"Q_i", census.quads_inner}};
}

void from_json(const json& j, FaceCensus& census) {
  census.bigons = j.at("B").get<int>();
  census.triangles_peripheral = j.at("T_p").get<int>();
  census.triangles_inner = j.at("T_i").get<int>();
  census.quads_peripheral = j.at("Q_p").get<int>();
  census.quads_inner = j.at("Q_i").get<int>();
}

void to_json(json& j, const PeripheralProfile& profile) {
  j = json{{"bigons_top", profile.bigons_top},
           {"bigons_bottom", profile.bigons_bottom},
           {"quads_top", profile.quads_top},
           {"quads_bottom", profile.quads_bottom}};
}

void to_json(json& j, const VolumeBound& bound) {
  j = json{{"v3_units", format_rational(bound.v3_units)},
           {"volume_upper", bound.decimal},
           {"case", bound.case_tag},
           {"theorem_v3_units", format_rational(bound.theorem_units)},
           {"theorem_upper", bound.theorem_decimal},
           {"satellite", bound.satellite}};
  if (bound.v3_units.denominator() == 1)
    j["tetrahedra"] = bound.v3_units.numerator();
  if (bound.companion)
    j["companion"] = {{"p", bound.companion->first},
                      {"q", bound.companion->second}};
  if (bound.reduced) j["reduced"] = *bound.reduced;
}

}  // namespace ttlink
