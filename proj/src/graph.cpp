#include "formation/graph.hpp"

#include <algorithm>
#include <set>

namespace formation {

namespace {

std::pair<VertexId, VertexId> unordered(const Edge& e) {
  return {std::min(e.tail, e.head), std::max(e.tail, e.head)};
}

std::string edgeText(const Edge& e) {
  return "[" + std::to_string(e.tail) + "," + std::to_string(e.head) + "]";
}

}  // namespace

Dim dimFromInt(int d) {
  if (d == 2) return Dim::Two;
  if (d == 3) return Dim::Three;
  throw InputError("dimension must be 2 or 3, got " + std::to_string(d));
}

Formation::Formation(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    VertexId v = vertices_[i];
    if (v < 0) throw InputError("vertices[" + std::to_string(i) + "]: negative id");
    if (!index_.emplace(v, i).second)
      throw InputError("vertices[" + std::to_string(i) + "]: duplicate id " + std::to_string(v));
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    std::string where = "edges[" + std::to_string(i) + "] " + edgeText(e);
    if (e.tail == e.head) throw InputError(where + ": self-loop");
    if (!hasVertex(e.tail) || !hasVertex(e.head)) throw InputError(where + ": undeclared endpoint");
    if (!seen.insert(unordered(e)).second) throw InputError(where + ": duplicate unordered pair");
  }
}

std::size_t Formation::indexOf(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

bool Formation::adjacent(VertexId a, VertexId b) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.tail == a && e.head == b) || (e.tail == b && e.head == a);
  });
}

std::size_t Formation::outDegree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.tail == v; }));
}

std::vector<std::size_t> Formation::outDegrees() const {
  std::vector<std::size_t> out(vertices_.size(), 0);
  for (const Edge& e : edges_) ++out[index_.at(e.tail)];
  return out;
}

Formation Formation::withEdges(std::vector<Edge> edges) const {
  return Formation(vertices_, std::move(edges));
}

MetaFormation::MetaFormation(std::vector<Formation> metaVertices, std::vector<Edge> interEdges)
    : metaVertices_(std::move(metaVertices)), interEdges_(std::move(interEdges)) {
  for (std::size_t m = 0; m < metaVertices_.size(); ++m) {
    for (VertexId v : metaVertices_[m].vertices()) {
      if (!owner_.emplace(v, m).second)
        throw InputError("metaVertices[" + std::to_string(m) + "]: vertex " + std::to_string(v) +
                         " already belongs to metaVertices[" + std::to_string(owner_[v]) + "]");
    }
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < interEdges_.size(); ++i) {
    const Edge& e = interEdges_[i];
    std::string where = "interEdges[" + std::to_string(i) + "] " + edgeText(e);
    auto t = owner_.find(e.tail);
    auto h = owner_.find(e.head);
    if (t == owner_.end() || h == owner_.end()) throw InputError(where + ": undeclared endpoint");
    if (t->second == h->second) throw InputError(where + ": both endpoints in one meta-vertex");
    if (!seen.insert(unordered(e)).second) throw InputError(where + ": duplicate unordered pair");
  }
}

std::size_t MetaFormation::owner(VertexId v) const {
  auto it = owner_.find(v);
  if (it == owner_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

MetaFormation MetaFormation::withInterEdges(std::vector<Edge> interEdges) const {
  return MetaFormation(metaVertices_, std::move(interEdges));
}

Formation flatten(const MetaFormation& meta) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (const Formation& f : meta.metaVertices()) {
    vertices.insert(vertices.end(), f.vertices().begin(), f.vertices().end());
    edges.insert(edges.end(), f.edges().begin(), f.edges().end());
  }
  edges.insert(edges.end(), meta.interEdges().begin(), meta.interEdges().end());
  return Formation(std::move(vertices), std::move(edges));
}

Edge UndirectedView::link(std::size_t edgeIndex) const {
  auto [a, b] = edges.at(edgeIndex);
  VertexId u = vertices[a], v = vertices[b];
  return {std::min(u, v), std::max(u, v)};
}

std::vector<Edge> UndirectedView::links(const std::vector<std::size_t>& edgeIndices) const {
  std::vector<Edge> out;
  out.reserve(edgeIndices.size());
  for (std::size_t i : edgeIndices) out.push_back(link(i));
  return out;
}

UndirectedView UndirectedView::subgraph(const std::vector<std::size_t>& edgeIndices) const {
  UndirectedView out{vertices, {}};
  for (std::size_t i : edgeIndices) out.edges.push_back(edges.at(i));
  return out;
}

UndirectedView underlying(const Formation& f) {
  UndirectedView view{f.vertices(), {}};
  view.edges.reserve(f.edgeCount());
  for (const Edge& e : f.edges()) view.edges.emplace_back(f.indexOf(e.tail), f.indexOf(e.head));
  return view;
}

}  // namespace formation
