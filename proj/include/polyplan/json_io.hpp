#pragma once

/// JSON schemas used by the CLI and report files:
///   complex        {"m": <int>, "maximal_faces": [[<1-based ints>], ...]}
///   groups         {"factors": [{"kind":"circle"} | {"kind":"sphere3"} |
///                               {"kind":"product","of":[...]}, ...]}
///   element        {"circle":[x,y]} | {"sphere3":[w,x,y,z]} | {"product":[...]}
///   configuration  {"elements":[<element>, ...], "face":[<1-based ints>]?}

#include <string>
#include <vector>

#include <json.hpp>

#include "polyplan/polyhedral_product.hpp"
#include "polyplan/verifier.hpp"

namespace polyplan {

nlohmann::json load_json_file(const std::string& path);

RawComplex complex_from_json(const nlohmann::json& j);
std::vector<GroupModel> groups_from_json(const nlohmann::json& j);

GroupModel group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupModel& g);

GroupElement element_from_json(const nlohmann::json& j, const GroupModel& g);
nlohmann::json element_to_json(const GroupElement& a, const GroupModel& g);

Configuration configuration_from_json(const nlohmann::json& j,
                                      const std::vector<GroupModel>& models, int m);
nlohmann::json configuration_to_json(const Configuration& cfg,
                                     const std::vector<GroupModel>& models);

nlohmann::json report_to_json(const CoverReport& report, const std::vector<GroupModel>& models);

}  // namespace polyplan
