#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "formation/graph.hpp"
#include "formation/rigidity.hpp"

namespace formation {

struct DofLedger {
  Dim dim = Dim::Two;
  std::vector<VertexId> vertices;
  std::vector<std::size_t> outDegree;
  std::vector<int> dof;
  std::vector<VertexId> leaders;
  int totalDof = 0;

  int dofOf(VertexId v) const;
  // Non-zero DOF counts, descending.
  std::vector<int> allocation() const;
};

DofLedger ledger(const Formation& f, Dim d);

struct PersistenceOptions {
  RigidityOptions rigidity;
  std::size_t terminalCap = 1'000'000;
};

// Edge indices refer to the source formation's edge list.
struct TerminalSubgraph {
  std::vector<std::size_t> retained;
  std::vector<std::size_t> removalTrace;
};

// All terminal subgraphs, ordered by their sorted (tail, head) edge lists.
std::vector<TerminalSubgraph> terminalSubgraphs(const Formation& f, Dim d,
                                                const PersistenceOptions& options = {});

struct NonRigidTerminal {
  std::vector<Edge> retained;
  std::vector<Edge> removed;
  RigidityVerdict rigidity;
};
struct LeaderList {
  std::vector<VertexId> leaders;
};
using PersistenceWitness = std::variant<std::monostate, NonRigidTerminal, LeaderList>;

struct PersistenceVerdict {
  bool persistent = false;
  bool structurallyPersistent = false;
  bool minimallyPersistent = false;
  PersistenceWitness witness;
  DofLedger ledger;
  std::string criterion;
  std::size_t terminalCount = 0;
  std::uint64_t seed = 0;
  int trials = 0;
};

PersistenceVerdict isPersistent(const Formation& f, Dim d, const PersistenceOptions& options = {});

struct Compliance {
  bool compliant = true;
  std::vector<VertexId> offenders;
};
Compliance localDofCompliance(const MetaFormation& meta, Dim d);

// PreconditionError if a meta-vertex is not persistent.
PersistenceVerdict mergedPersistence(const MetaFormation& meta, Dim d, const PersistenceOptions& options = {});

// Throws PreconditionError naming the first non-persistent member.
void requirePersistent(const std::vector<Formation>& members, Dim d, const PersistenceOptions& options,
                       const std::string& what);

}  // namespace formation
