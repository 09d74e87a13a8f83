#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "formation/graph.hpp"
#include "formation/persistence.hpp"
#include "formation/rigidity.hpp"

namespace formation {

// N: rigid body, D: connected pair (3D only), S: single vertex.
enum class MetaKind { N, D, S };
const char* kindName(MetaKind k);

struct MetaClass {
  Dim dim = Dim::Two;
  std::vector<MetaKind> kinds;
  std::vector<std::size_t> n, d, s;

  // Minimal |E_M| of a rigid merging: 3|N|+2|S|-3 or 6|N|+5|D|+3|S|-6.
  long bound() const;
};

// PreconditionError for non-rigid meta-vertices (and edgeless pairs in 3D).
MetaClass classify(const MetaFormation& meta, Dim d, const RigidityOptions& options = {});

struct MetaCount {
  std::vector<std::size_t> i, j, k;
  std::size_t size = 0;
  long bound = 0;
  bool violated() const { return static_cast<long>(size) > bound; }
};

// Class counts for the inter-edges at `subset` (indices into interEdges()).
// 2D uses I and J only (k stays empty).
MetaCount metaCount(const MetaFormation& meta, const MetaClass& cls, const std::vector<std::size_t>& subset);
std::optional<MetaCount> metaCountViolation3D(const MetaFormation& meta, const MetaClass& cls,
                                              const std::vector<std::size_t>& subset);

struct MetaViolation {
  std::vector<Edge> edges;
  MetaCount count;
};
using MetaWitness = std::variant<std::monostate, MetaViolation, ViolatingSubset, SeparatingPair, RankDeficit>;

// Found: some E_M' of the bound's size satisfies every count. NotFound: none does.
enum class CountingStatus { NotApplicable, Found, NotFound, Skipped };
const char* countingName(CountingStatus s);

struct MetaOptions {
  RigidityOptions rigidity;
  std::size_t subsetEdgeCap = 18;
  std::size_t subsetWorkCap = 20'000'000;
};

struct MetaVerdict {
  bool rigid = false;
  bool edgeOptimal = false;
  MetaClass classes;
  long bound = 0;
  std::size_t interEdgeCount = 0;
  std::vector<Edge> selected;
  MetaWitness witness;
  std::string criterion;
  CountingStatus counting = CountingStatus::NotApplicable;
  std::vector<Edge> countingSubset;
  std::optional<std::size_t> rank;
};

MetaVerdict metaRigid2D(const MetaFormation& meta, const MetaOptions& options = {});
MetaVerdict metaRigid3D(const MetaFormation& meta, const MetaOptions& options = {});
MetaVerdict metaRigid(const MetaFormation& meta, Dim d, const MetaOptions& options = {});

// Each N meta-vertex replaced by its canonical minimally rigid spanning
// subgraph, each D by its edge.
MetaFormation substituteMinimal(const MetaFormation& meta, Dim d, const RigidityOptions& options = {});

bool edgeOptimalRigid(const MetaFormation& meta, Dim d, const MetaOptions& options = {});
// PreconditionError if a meta-vertex is not persistent.
bool edgeOptimalPersistent(const MetaFormation& meta, Dim d, const PersistenceOptions& options = {});

}  // namespace formation
