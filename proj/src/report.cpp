#include "formation/report.hpp"

#include <sstream>

namespace formation {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

std::string edgesText(const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    out << (i ? " " : "") << edges[i].tail << "->" << edges[i].head;
  return out.str();
}

std::string idsText(const std::vector<VertexId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  return out.str();
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string witnessText(const RigidityWitness& w) {
  return std::visit(Overload{
                        [](std::monostate) { return std::string("none"); },
                        [](const ViolatingSubset& s) {
                          return "violating subset of " + std::to_string(s.edges.size()) + " edges on " +
                                 std::to_string(s.vertexCount) + " vertices (bound " + std::to_string(s.bound) +
                                 "): " + edgesText(s.edges);
                        },
                        [](const SeparatingPair& p) {
                          return "separating pair {" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
                        },
                        [](const RankDeficit& r) {
                          return "rank " + std::to_string(r.observed) + " < " + std::to_string(r.required);
                        },
                    },
                    w);
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

}  // namespace

Json toJson(const RigidityWitness& w) {
  return std::visit(Overload{
                        [](std::monostate) { return Json(nullptr); },
                        [](const ViolatingSubset& s) {
                          Json j;
                          j["kind"] = "violating-subset";
                          j["edges"] = toJson(s.edges);
                          j["vertexCount"] = s.vertexCount;
                          j["bound"] = s.bound;
                          return j;
                        },
                        [](const SeparatingPair& p) {
                          Json j;
                          j["kind"] = "separating-pair";
                          j["pair"] = Json::array({p.first, p.second});
                          return j;
                        },
                        [](const RankDeficit& r) {
                          Json j;
                          j["kind"] = "rank-deficit";
                          j["observed"] = r.observed;
                          j["required"] = r.required;
                          j["independent"] = toJson(r.independent);
                          return j;
                        },
                    },
                    w);
}

Json toJson(const RigidityVerdict& v) {
  Json j;
  j["rigid"] = v.rigid;
  j["minimallyRigid"] = v.minimallyRigid;
  j["criterion"] = v.criterion;
  j["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  j["witness"] = toJson(v.witness);
  return j;
}

Json toJson(const DofLedger& l) {
  Json j;
  j["dim"] = toInt(l.dim);
  Json per = Json::array();
  for (std::size_t i = 0; i < l.vertices.size(); ++i) {
    Json v;
    v["vertex"] = l.vertices[i];
    v["outDegree"] = l.outDegree[i];
    v["dof"] = l.dof[i];
    per.push_back(v);
  }
  j["vertices"] = per;
  j["leaders"] = l.leaders;
  j["totalDof"] = l.totalDof;
  j["missingDof"] = dofConstant(l.dim, l.vertices.size()) - l.totalDof;
  return j;
}

Json toJson(const PersistenceVerdict& v) {
  Json j;
  j["persistent"] = v.persistent;
  j["structurallyPersistent"] = v.structurallyPersistent;
  j["minimallyPersistent"] = v.minimallyPersistent;
  j["criterion"] = v.criterion;
  j["terminalSubgraphs"] = v.terminalCount;
  j["witness"] = std::visit(Overload{
                                [](std::monostate) { return Json(nullptr); },
                                [](const NonRigidTerminal& t) {
                                  Json w;
                                  w["kind"] = "non-rigid-terminal-subgraph";
                                  w["retained"] = toJson(t.retained);
                                  w["removed"] = toJson(t.removed);
                                  w["rigidity"] = toJson(t.rigidity);
                                  return w;
                                },
                                [](const LeaderList& l) {
                                  Json w;
                                  w["kind"] = "leaders";
                                  w["leaders"] = l.leaders;
                                  return w;
                                },
                            },
                            v.witness);
  j["ledger"] = toJson(v.ledger);
  j["seed"] = v.seed;
  j["trials"] = v.trials;
  return j;
}

Json toJson(const MetaClass& c) {
  Json j;
  j["N"] = indices(c.n);
  if (c.dim == Dim::Three) j["D"] = indices(c.d);
  j["S"] = indices(c.s);
  return j;
}

Json toJson(const MetaVerdict& v) {
  Json j;
  j["rigid"] = v.rigid;
  j["edgeOptimal"] = v.edgeOptimal;
  j["criterion"] = v.criterion;
  j["classes"] = toJson(v.classes);
  j["bound"] = v.bound;
  j["interEdgeCount"] = v.interEdgeCount;
  j["selected"] = toJson(v.selected);
  j["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
  if (v.classes.dim == Dim::Three) {
    Json c;
    c["status"] = countingName(v.counting);
    c["subset"] = toJson(v.countingSubset);
    c["note"] = "counting conditions are necessary only; the verdict comes from the rank oracle";
    j["counting"] = c;
  }
  j["witness"] = std::visit(Overload{
                                [](const MetaViolation& m) {
                                  Json w;
                                  w["kind"] = "meta-count-violation";
                                  w["edges"] = toJson(m.edges);
                                  w["I"] = indices(m.count.i);
                                  w["J"] = indices(m.count.j);
                                  if (!m.count.k.empty()) w["K"] = indices(m.count.k);
                                  w["bound"] = m.count.bound;
                                  return w;
                                },
                                [](std::monostate) { return Json(nullptr); },
                                [](const auto& r) { return toJson(RigidityWitness(r)); },
                            },
                            v.witness);
  return j;
}

Json toJson(const Feasibility& f) {
  Json j;
  j["feasible"] = f.feasible;
  j["reason"] = reasonName(f.reason);
  j["missingDof"] = f.missing;
  j["totalMissingDof"] = f.totalMissing;
  return j;
}

Json toJson(const MergePlan& plan, const std::vector<Formation>& collection) {
  Json j;
  j["dim"] = toInt(plan.dim);
  j["order"] = indices(plan.order);
  Json steps = Json::array();
  for (const MergeStep& s : plan.steps) {
    Json x;
    x["step"] = s.step;
    x["merged"] = indices(s.merged);
    x["member"] = s.member;
    x["edges"] = s.edgeCount;
    x["missingBefore"] = s.missingBefore;
    x["missingAfter"] = s.missingAfter;
    x["pattern"] = s.pattern;
    steps.push_back(x);
  }
  j["steps"] = steps;
  Json edges = Json::array();
  for (const PlannedEdge& e : plan.edges) {
    Json x;
    x["edge"] = toJson(e.edge);
    x["rule"] = e.rule;
    x["pattern"] = e.pattern;
    x["step"] = e.step;
    edges.push_back(x);
  }
  j["edges"] = edges;
  j["interEdges"] = toJson(plan.interEdges());
  j["merged"] = toJson(MetaFormation(collection, plan.interEdges()));
  return j;
}

Json toJson(const PlanReport& r) {
  Json j;
  j["persistent"] = r.persistent;
  j["structurallyPersistent"] = r.structurallyPersistent;
  j["edgeOptimalPersistent"] = r.edgeOptimalPersistent;
  j["missingDofConserved"] = r.missingDofConserved;
  j["criterion"] = r.criterion;
  j["ledger"] = toJson(r.ledger);
  return j;
}

std::string toText(const RigidityVerdict& v) {
  std::ostringstream out;
  out << "rigid: " << yes(v.rigid) << "\nminimally rigid: " << yes(v.minimallyRigid) << "\ncriterion: " << v.criterion
      << "\n";
  if (v.rank) out << "rank: " << *v.rank << "\n";
  out << "witness: " << witnessText(v.witness) << "\n";
  return out.str();
}

std::string toText(const PersistenceVerdict& v) {
  std::ostringstream out;
  out << "persistent: " << yes(v.persistent) << "\nstructurally persistent: " << yes(v.structurallyPersistent)
      << "\nminimally persistent: " << yes(v.minimallyPersistent) << "\ncriterion: " << v.criterion
      << "\ntotal DOF: " << v.ledger.totalDof << "\nleaders: " << idsText(v.ledger.leaders) << "\n";
  if (auto* t = std::get_if<NonRigidTerminal>(&v.witness))
    out << "witness: non-rigid terminal subgraph " << edgesText(t->retained) << " ("
        << witnessText(t->rigidity.witness) << ")\n";
  if (auto* l = std::get_if<LeaderList>(&v.witness)) out << "witness: leaders " << idsText(l->leaders) << "\n";
  out << "seed: " << v.seed << " trials: " << v.trials << "\n";
  return out.str();
}

std::string toText(const MetaVerdict& v) {
  std::ostringstream out;
  out << "rigid: " << yes(v.rigid) << "\nedge-optimal: " << yes(v.edgeOptimal) << "\ncriterion: " << v.criterion
      << "\nclasses: N=" << v.classes.n.size() << " D=" << v.classes.d.size() << " S=" << v.classes.s.size()
      << "\nbound: " << v.bound << " |E_M|: " << v.interEdgeCount << "\nselected: " << edgesText(v.selected) << "\n";
  if (v.classes.dim == Dim::Three)
    out << "counting screen: " << countingName(v.counting) << " (necessary only)\n";
  if (auto* m = std::get_if<MetaViolation>(&v.witness))
    out << "witness: " << m->edges.size() << " inter-edges exceed bound " << m->count.bound << ": "
        << edgesText(m->edges) << "\n";
  return out.str();
}

std::string toText(const Feasibility& f) {
  return std::string("feasible: ") + yes(f.feasible) + "\nreason: " + reasonName(f.reason) +
         "\ntotal missing DOF: " + std::to_string(f.totalMissing) + "\n";
}

std::string toText(const MergePlan& plan) {
  std::ostringstream out;
  out << "planned edges: " << plan.edges.size() << "\n";
  for (const PlannedEdge& e : plan.edges)
    out << "  " << e.edge.tail << " -> " << e.edge.head << "  [" << e.rule << "; " << e.pattern << "; step "
        << e.step << "]\n";
  return out.str();
}

std::string toText(const PlanReport& r) {
  std::ostringstream out;
  out << "persistent: " << yes(r.persistent) << "\nstructurally persistent: " << yes(r.structurallyPersistent)
      << "\nedge-optimal persistent: " << yes(r.edgeOptimalPersistent)
      << "\nmissing DOF conserved: " << yes(r.missingDofConserved) << "\ncriterion: " << r.criterion << "\n";
  return out.str();
}

std::vector<Edge> planEdgesFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  // Accepts a plan-merge report, a bare plan, or a merged meta-formation.
  if (j.is_object() && j.contains("plan") && j["plan"].is_object()) {
    if (!j["plan"].contains("interEdges") || !j["plan"]["interEdges"].is_array())
      throw InputError("$.plan: plan needs an \"interEdges\" array");
    return edgesFromJson(j["plan"]["interEdges"], "$.plan.interEdges");
  }
  if (!j.is_object() || !j.contains("interEdges") || !j["interEdges"].is_array())
    throw InputError("$: plan needs an \"interEdges\" array");
  return edgesFromJson(j["interEdges"], "$.interEdges");
}

}  // namespace formation
