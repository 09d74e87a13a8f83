#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "formation/graph.hpp"
#include "json.hpp"

namespace formation {

using Json = nlohmann::ordered_json;

Formation parseFormation(std::string_view text);
MetaFormation parseMetaFormation(std::string_view text);
// Accepts a JSON array of formations, {"formations":[...]}, or a
// MetaFormation document (its meta-vertices are taken, E_M ignored).
std::vector<Formation> parseCollection(std::string_view text);

// `path` prefixes error locations, e.g. "metaVertices[2]".
Formation formationFromJson(const nlohmann::json& j, const std::string& path);
std::vector<Edge> edgesFromJson(const nlohmann::json& j, const std::string& path);

Json toJson(const Edge& e);
Json toJson(const std::vector<Edge>& edges);
Json toJson(const Formation& f);
Json toJson(const MetaFormation& m);

std::string exportDot(const Formation& f);
std::string exportDot(const MetaFormation& m);

std::string readFile(const std::string& path);

}  // namespace formation
