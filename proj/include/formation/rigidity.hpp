#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "formation/graph.hpp"
#include "formation/modular.hpp"

namespace formation {

struct SparsityParams {
  int k = 2;
  int l = 3;
  static SparsityParams planar() { return {2, 3}; }
  static SparsityParams spatial() { return {3, 6}; }
};

// Degrees of freedom of a rigid body on n vertices in dimension d.
int dofConstant(Dim d, std::size_t n);
// d*n - f(d,n): rank of the rigidity matrix of a rigid graph.
std::size_t requiredRank(Dim d, std::size_t n);

struct RigidityOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  std::size_t sparsityVertexCap = 20;
};

struct ViolatingSubset {
  std::vector<Edge> edges;
  std::size_t vertexCount = 0;
  long bound = 0;
};
struct SeparatingPair {
  VertexId first = 0;
  VertexId second = 0;
};
struct RankDeficit {
  std::size_t observed = 0;
  std::size_t required = 0;
  std::vector<Edge> independent;
};
using RigidityWitness = std::variant<std::monostate, ViolatingSubset, SeparatingPair, RankDeficit>;

struct RigidityVerdict {
  bool rigid = false;
  bool minimallyRigid = false;
  RigidityWitness witness;
  // Which test settled the verdict.
  std::string criterion;
  std::optional<std::size_t> rank;
};

// (k,l) pebble game for 0 <= l < 2k on dense vertex indices.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t vertexCount, SparsityParams params = SparsityParams::planar());

  // Accepts the edge iff it keeps the accepted set (k,l)-sparse.
  bool insert(std::size_t u, std::size_t v);
  // After a rejection: the vertex set spanning a tight subgraph that blocked it.
  const std::vector<std::size_t>& lastBlock() const { return block_; }
  std::size_t accepted() const { return accepted_; }

 private:
  bool gather(std::size_t target, std::size_t avoid);
  std::vector<std::size_t> reach(std::size_t u, std::size_t v) const;

  SparsityParams params_;
  std::vector<int> free_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> block_;
  std::size_t accepted_ = 0;
};

struct PebbleRun {
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> rejected;
  // Edge indices of the first violating subset met (tight block + rejected edge).
  std::vector<std::size_t> firstViolation;
};
// Plays the edges of `view` in the given order (all edges if empty).
PebbleRun runPebbleGame(const UndirectedView& view, const std::vector<std::size_t>& order = {});

using Positions = std::vector<std::int64_t>;  // d coordinates per vertex
Positions samplePositions(std::size_t vertexCount, Dim d, std::mt19937_64& rng);
modp::Row rigidityRow(const UndirectedView& view, std::size_t edgeIndex, Dim d, const Positions& p);

struct OracleResult {
  std::size_t rank = 0;
  std::size_t required = 0;
  std::vector<std::size_t> perTrial;
  // Greedily independent edges at the best trial's positions.
  std::vector<std::size_t> independent;
  std::uint64_t seed = 0;
  int trials = 0;
  bool rigid() const { return rank == required; }
};
OracleResult genericRankOracle(const UndirectedView& view, Dim d, std::uint64_t seed, int trials);
// Same, with rows inserted in `order` so `independent` prefers earlier edges.
OracleResult genericRankOracle(const UndirectedView& view, Dim d, std::uint64_t seed, int trials,
                               const std::vector<std::size_t>& order);

// Edge indices of some E'' with |E''| > k|V(E'')| - l, if any. (3,6) is
// exhaustive over vertex subsets; ResourceError above `vertexCap` vertices.
std::optional<std::vector<std::size_t>> sparsityViolation(const UndirectedView& view, SparsityParams p,
                                                          std::size_t vertexCap = 20);

struct Connectivity {
  bool threeConnected = true;
  std::optional<SeparatingPair> pair;
};
Connectivity threeConnectivity(const UndirectedView& view);

RigidityVerdict lamanCheck2D(const UndirectedView& view);
RigidityVerdict rigid3DCheck(const UndirectedView& view, const RigidityOptions& options = {});
RigidityVerdict checkRigidity(const UndirectedView& view, Dim d, const RigidityOptions& options = {});

// Minimally rigid spanning edge set (ascending indices) containing every
// fixed edge. PreconditionError if the graph is not rigid or the fixed
// edges are dependent.
std::vector<std::size_t> minimallyRigidSpanning(const UndirectedView& view, Dim d,
                                                const std::vector<std::vector<std::size_t>>& fixed,
                                                const RigidityOptions& options = {});

}  // namespace formation
