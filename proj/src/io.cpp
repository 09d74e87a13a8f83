#include "formation/io.hpp"

#include <fstream>
#include <sstream>

namespace formation {

namespace {

nlohmann::json parseDocument(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const nlohmann::json& member(const nlohmann::json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing \"" + key + "\"");
  if (!it->is_array()) throw InputError(path + "." + key + ": expected an array");
  return *it;
}

VertexId idFromJson(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer vertex id");
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) throw InputError(path + ": id out of range");
    return static_cast<VertexId>(u);
  }
  VertexId v = j.get<std::int64_t>();
  if (v < 0) throw InputError(path + ": negative vertex id");
  return v;
}

template <class Build>
auto located(const std::string& path, Build build) -> decltype(build()) {
  try {
    return build();
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dotBody(const Formation& f) {
  std::ostringstream out;
  for (VertexId v : f.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : f.edges()) out << "  " << e.tail << " -> " << e.head << ";\n";
  return out.str();
}

}  // namespace

std::vector<Edge> edgesFromJson(const nlohmann::json& j, const std::string& path) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string where = path + "[" + std::to_string(i) + "]";
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) throw InputError(where + ": expected [tail, head]");
    edges.push_back({idFromJson(pair[0], where + "[0]"), idFromJson(pair[1], where + "[1]")});
  }
  return edges;
}

Formation formationFromJson(const nlohmann::json& j, const std::string& path) {
  const auto& vs = member(j, "vertices", path);
  const auto& es = member(j, "edges", path);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back(idFromJson(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
  std::vector<Edge> edges = edgesFromJson(es, path + ".edges");
  return located(path, [&] { return Formation(std::move(vertices), std::move(edges)); });
}

Formation parseFormation(std::string_view text) {
  return formationFromJson(parseDocument(text), "$");
}

MetaFormation parseMetaFormation(std::string_view text) {
  nlohmann::json j = parseDocument(text);
  const auto& ms = member(j, "metaVertices", "$");
  std::vector<Formation> metas;
  for (std::size_t i = 0; i < ms.size(); ++i)
    metas.push_back(formationFromJson(ms[i], "$.metaVertices[" + std::to_string(i) + "]"));
  std::vector<Edge> inter;
  if (j.contains("interEdges")) inter = edgesFromJson(member(j, "interEdges", "$"), "$.interEdges");
  return located("$", [&] { return MetaFormation(std::move(metas), std::move(inter)); });
}

std::vector<Formation> parseCollection(std::string_view text) {
  nlohmann::json j = parseDocument(text);
  const nlohmann::json* list = nullptr;
  std::string path = "$";
  if (j.is_array()) {
    list = &j;
  } else if (j.is_object() && j.contains("formations")) {
    list = &member(j, "formations", "$");
    path = "$.formations";
  } else if (j.is_object() && j.contains("metaVertices")) {
    list = &member(j, "metaVertices", "$");
    path = "$.metaVertices";
  } else {
    throw InputError("$: expected an array of formations, {\"formations\":...} or a meta-formation");
  }
  std::vector<Formation> out;
  for (std::size_t i = 0; i < list->size(); ++i)
    out.push_back(formationFromJson((*list)[i], path + "[" + std::to_string(i) + "]"));
  // Disjointness is part of the collection contract.
  located(path, [&] { return MetaFormation(out, {}); });
  return out;
}

Json toJson(const Edge& e) { return Json::array({e.tail, e.head}); }

Json toJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(toJson(e));
  return out;
}

Json toJson(const Formation& f) {
  Json out;
  out["vertices"] = f.vertices();
  out["edges"] = toJson(f.edges());
  return out;
}

Json toJson(const MetaFormation& m) {
  Json out;
  out["metaVertices"] = Json::array();
  for (const Formation& f : m.metaVertices()) out["metaVertices"].push_back(toJson(f));
  out["interEdges"] = toJson(m.interEdges());
  return out;
}

std::string exportDot(const Formation& f) {
  return "digraph formation {\n" + dotBody(f) + "}\n";
}

std::string exportDot(const MetaFormation& m) {
  std::ostringstream out;
  out << "digraph meta {\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    out << " subgraph cluster_" << i << " {\n" << dotBody(m.metaVertices()[i]) << " }\n";
  for (const Edge& e : m.interEdges())
    out << "  " << e.tail << " -> " << e.head << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace formation
