#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formation {

using VertexId = std::int64_t;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Dim : int { Two = 2, Three = 3 };

constexpr int toInt(Dim d) { return static_cast<int>(d); }
Dim dimFromInt(int d);

// Malformed or invariant-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or search exceeded its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation precondition
// (non-rigid meta-vertex, non-persistent member, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Formation {
 public:
  Formation() = default;
  // Throws InputError on self-loops, repeated unordered pairs, undeclared
  // endpoints, negative or repeated vertex ids.
  Formation(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }

  bool hasVertex(VertexId v) const { return index_.count(v) != 0; }
  // Position of v in vertices(); throws InputError if absent.
  std::size_t indexOf(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  std::size_t outDegree(VertexId v) const;
  // Out-degrees aligned with vertices().
  std::vector<std::size_t> outDegrees() const;

  Formation withEdges(std::vector<Edge> edges) const;

  bool operator==(const Formation& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> index_;
};

class MetaFormation {
 public:
  MetaFormation() = default;
  // Throws InputError when vertex sets overlap, an inter-edge endpoint is
  // unknown or both endpoints lie in one meta-vertex, or pairs repeat.
  MetaFormation(std::vector<Formation> metaVertices, std::vector<Edge> interEdges);

  const std::vector<Formation>& metaVertices() const { return metaVertices_; }
  const std::vector<Edge>& interEdges() const { return interEdges_; }
  std::size_t size() const { return metaVertices_.size(); }
  // Index of the meta-vertex containing v.
  std::size_t owner(VertexId v) const;
  std::size_t totalVertices() const { return owner_.size(); }

  MetaFormation withInterEdges(std::vector<Edge> interEdges) const;

  bool operator==(const MetaFormation& o) const {
    return metaVertices_ == o.metaVertices_ && interEdges_ == o.interEdges_;
  }

 private:
  std::vector<Formation> metaVertices_;
  std::vector<Edge> interEdges_;
  std::map<VertexId, std::size_t> owner_;
};

// Union of meta-vertices; internal edges first (meta-vertex order), then E_M.
Formation flatten(const MetaFormation& meta);

using IndexPair = std::pair<std::size_t, std::size_t>;

// Undirected graph on dense indices. Edge i corresponds to edge i of the
// source formation when built by underlying().
struct UndirectedView {
  std::vector<VertexId> vertices;
  std::vector<IndexPair> edges;

  std::size_t vertexCount() const { return vertices.size(); }
  std::size_t edgeCount() const { return edges.size(); }
  // Edge as an id pair with the smaller id first.
  Edge link(std::size_t edgeIndex) const;
  std::vector<Edge> links(const std::vector<std::size_t>& edgeIndices) const;
  UndirectedView subgraph(const std::vector<std::size_t>& edgeIndices) const;
};

UndirectedView underlying(const Formation& f);

}  // namespace formation
