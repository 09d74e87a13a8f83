#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "formation/graph.hpp"
#include "formation/persistence.hpp"

namespace formation {

enum class FeasibilityReason { Ok, MissingDofExceeded, NonStructuralVsZeroDof, TwoLoneLeaders, TooFewVertices };
const char* reasonName(FeasibilityReason r);

struct Feasibility {
  bool feasible = false;
  FeasibilityReason reason = FeasibilityReason::Ok;
  std::vector<int> missing;
  int totalMissing = 0;
};

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(FeasibilityReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  FeasibilityReason reason() const { return reason_; }

 private:
  FeasibilityReason reason_;
};

// No construction matched a feasible input. Should not happen.
class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest total DOF of a persistent formation on n vertices.
int dofCapacity(Dim d, std::size_t vertexCount);
// PreconditionError if f is not persistent.
int missingDof(const Formation& f, Dim d, const PersistenceOptions& options = {});
Feasibility feasibility(const std::vector<Formation>& collection, Dim d, const PersistenceOptions& options = {});

struct PlannedEdge {
  Edge edge;
  std::string rule;     // 2D-pair, op-v, op-e, catalog-4-2, catalog-3-3, small-graph (+reversal)
  std::string pattern;  // construction used, e.g. "6-0 (3,2,1)"
  std::size_t step = 0;
};

struct MergeStep {
  std::size_t step = 0;
  std::vector<std::size_t> merged;  // collection indices already in the partial result
  std::size_t member = 0;
  std::size_t edgeCount = 0;
  int missingBefore = 0;  // partial + member
  int missingAfter = 0;
  std::string pattern;
};

struct MergePlan {
  Dim dim = Dim::Two;
  std::vector<PlannedEdge> edges;
  std::vector<MergeStep> steps;
  std::vector<std::size_t> order;

  std::vector<Edge> interEdges() const;
};

MergePlan planPair2D(const Formation& a, const Formation& b, const PersistenceOptions& options = {});
MergePlan planPair3D(const Formation& a, const Formation& b, const PersistenceOptions& options = {});
MergePlan planCollection(const std::vector<Formation>& collection, Dim d, const PersistenceOptions& options = {});

// Minimal |E_M| joining two rigid bodies of the given sizes.
std::size_t pairEdgeCount(Dim d, std::size_t na, std::size_t nb);

struct PlanReport {
  bool persistent = false;
  bool structurallyPersistent = false;
  bool edgeOptimalPersistent = false;
  bool missingDofConserved = false;
  std::string criterion;
  DofLedger ledger;
};

// InputError if a planned edge references an unknown vertex.
PlanReport verifyPlan(const std::vector<Formation>& collection, const std::vector<Edge>& plan, Dim d,
                      const PersistenceOptions& options = {});

}  // namespace formation
