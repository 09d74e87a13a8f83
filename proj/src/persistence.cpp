#include "formation/persistence.hpp"

#include <algorithm>
#include <set>

namespace formation {

int DofLedger::dofOf(VertexId v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return dof[i];
  throw InputError("unknown vertex " + std::to_string(v));
}

std::vector<int> DofLedger::allocation() const {
  std::vector<int> out;
  for (int x : dof)
    if (x > 0) out.push_back(x);
  std::sort(out.rbegin(), out.rend());
  return out;
}

DofLedger ledger(const Formation& f, Dim d) {
  DofLedger l;
  l.dim = d;
  l.vertices = f.vertices();
  l.outDegree = f.outDegrees();
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    int dof = std::max(0, toInt(d) - static_cast<int>(l.outDegree[i]));
    l.dof.push_back(dof);
    l.totalDof += dof;
    if (l.outDegree[i] == 0) l.leaders.push_back(l.vertices[i]);
  }
  return l;
}

namespace {

std::vector<Edge> sortedEdges(const Formation& f, const std::vector<std::size_t>& indices) {
  std::vector<Edge> out;
  for (std::size_t i : indices) out.push_back(f.edges()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> edgesAt(const Formation& f, const std::vector<std::size_t>& indices) {
  std::vector<Edge> out;
  for (std::size_t i : indices) out.push_back(f.edges()[i]);
  return out;
}

class TerminalSearch {
 public:
  TerminalSearch(const Formation& f, Dim d, std::size_t cap)
      : f_(f), dim_(toInt(d)), cap_(cap), outEdges_(f.vertexCount()) {
    for (std::size_t i = 0; i < f.edgeCount(); ++i) outEdges_[f.indexOf(f.edges()[i].tail)].push_back(i);
  }

  std::vector<TerminalSubgraph> run() {
    std::vector<char> retained(f_.edgeCount(), 1);
    std::vector<std::size_t> trace;
    explore(retained, trace);
    return std::move(found_);
  }

 private:
  void explore(std::vector<char>& retained, std::vector<std::size_t>& trace) {
    if (!visited_.insert(retained).second) return;
    if (visited_.size() > cap_) throw ResourceError("terminal subgraph enumeration exceeds cap " + std::to_string(cap_));
    for (const auto& edges : outEdges_) {
      std::size_t live = 0;
      for (std::size_t e : edges) live += retained[e];
      if (live <= static_cast<std::size_t>(dim_)) continue;
      for (std::size_t e : edges) {
        if (!retained[e]) continue;
        retained[e] = 0;
        trace.push_back(e);
        explore(retained, trace);
        trace.pop_back();
        retained[e] = 1;
      }
      return;
    }
    TerminalSubgraph t;
    for (std::size_t i = 0; i < retained.size(); ++i)
      if (retained[i]) t.retained.push_back(i);
    t.removalTrace = trace;
    found_.push_back(std::move(t));
    if (found_.size() > cap_) throw ResourceError("terminal subgraph count exceeds cap " + std::to_string(cap_));
  }

  const Formation& f_;
  int dim_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> outEdges_;
  std::set<std::vector<char>> visited_;
  std::vector<TerminalSubgraph> found_;
};

PersistenceVerdict finish(PersistenceVerdict v, const Formation& f, Dim d, const PersistenceOptions& options) {
  v.ledger = ledger(f, d);
  v.seed = options.rigidity.seed;
  v.trials = options.rigidity.trials;
  v.structurallyPersistent = v.persistent && (d == Dim::Two || v.ledger.leaders.size() <= 1);
  v.minimallyPersistent = v.persistent && f.edgeCount() == requiredRank(d, f.vertexCount());
  if (v.persistent && !v.structurallyPersistent) v.witness = LeaderList{v.ledger.leaders};
  return v;
}

}  // namespace

std::vector<TerminalSubgraph> terminalSubgraphs(const Formation& f, Dim d, const PersistenceOptions& options) {
  auto found = TerminalSearch(f, d, options.terminalCap).run();
  std::vector<std::pair<std::vector<Edge>, TerminalSubgraph>> keyed;
  for (auto& t : found) keyed.emplace_back(sortedEdges(f, t.retained), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TerminalSubgraph> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

PersistenceVerdict isPersistent(const Formation& f, Dim d, const PersistenceOptions& options) {
  PersistenceVerdict v;
  v.criterion = "terminal-subgraphs";
  UndirectedView view = underlying(f);
  auto terminals = terminalSubgraphs(f, d, options);
  v.terminalCount = terminals.size();
  v.persistent = true;
  for (const auto& t : terminals) {
    RigidityVerdict r = checkRigidity(view.subgraph(t.retained), d, options.rigidity);
    if (!r.rigid) {
      v.persistent = false;
      v.witness = NonRigidTerminal{edgesAt(f, t.retained), edgesAt(f, t.removalTrace), r};
      break;
    }
  }
  return finish(std::move(v), f, d, options);
}

Compliance localDofCompliance(const MetaFormation& meta, Dim d) {
  Compliance c;
  std::set<VertexId> offenders;
  for (const Formation& m : meta.metaVertices()) {
    DofLedger l = ledger(m, d);
    for (std::size_t i = 0; i < l.vertices.size(); ++i) {
      VertexId v = l.vertices[i];
      auto sent = std::count_if(meta.interEdges().begin(), meta.interEdges().end(),
                                [&](const Edge& e) { return e.tail == v; });
      if (sent > l.dof[i]) offenders.insert(v);
    }
  }
  c.offenders.assign(offenders.begin(), offenders.end());
  c.compliant = c.offenders.empty();
  return c;
}

void requirePersistent(const std::vector<Formation>& members, Dim d, const PersistenceOptions& options,
                       const std::string& what) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!isPersistent(members[i], d, options).persistent)
      throw PreconditionError(what + "[" + std::to_string(i) + "] is not persistent in " +
                              std::to_string(toInt(d)) + "D");
}

PersistenceVerdict mergedPersistence(const MetaFormation& meta, Dim d, const PersistenceOptions& options) {
  requirePersistent(meta.metaVertices(), d, options, "metaVertices");
  Formation flat = flatten(meta);
  if (!localDofCompliance(meta, d).compliant) {
    PersistenceVerdict v = isPersistent(flat, d, options);
    v.criterion = "full-criterion-fallback";
    return v;
  }
  PersistenceVerdict v;
  v.criterion = "compliant-merge-rigidity";
  UndirectedView view = underlying(flat);
  RigidityVerdict r = checkRigidity(view, d, options.rigidity);
  v.persistent = r.rigid;
  if (!v.persistent) {
    // Any terminal subgraph of a non-rigid graph is non-rigid; report the one
    // keeping the first `dim` sorted out-edges of each overloaded vertex.
    std::vector<std::size_t> order(flat.edgeCount());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return flat.edges()[a] < flat.edges()[b]; });
    std::vector<std::size_t> kept(flat.vertexCount(), 0);
    std::vector<std::size_t> retained, removed;
    for (std::size_t i : order) {
      std::size_t t = flat.indexOf(flat.edges()[i].tail);
      (kept[t]++ < static_cast<std::size_t>(toInt(d)) ? retained : removed).push_back(i);
    }
    std::sort(retained.begin(), retained.end());
    v.witness = NonRigidTerminal{edgesAt(flat, retained), edgesAt(flat, removed), r};
  }
  return finish(std::move(v), flat, d, options);
}

}  // namespace formation
