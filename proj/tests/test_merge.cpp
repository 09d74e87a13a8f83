#include <algorithm>
#include <map>

#include "doctest.h"
#include "formation/catalog.hpp"
#include "formation/generate.hpp"
#include "formation/merge.hpp"
#include "formation/meta.hpp"
#include "support.hpp"

using namespace formation;
using fixtures::triangle;

namespace {

std::map<VertexId, int> tailDegrees(const MergePlan& p) {
  std::map<VertexId, int> out;
  for (const PlannedEdge& e : p.edges) ++out[e.edge.tail];
  return out;
}

}  // namespace

TEST_CASE("missing DOF") {
  CHECK(missingDof(triangle(1), Dim::Two) == 0);
  CHECK(missingDof(fixtures::singleton(1), Dim::Two) == 0);
  Formation two({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 1}, {4, 2}});
  CHECK(missingDof(two, Dim::Two) == 1);
  CHECK(dofCapacity(Dim::Three, 2) == 5);
}

TEST_CASE("feasibility gates") {
  CHECK(feasibility({triangle(1), triangle(4)}, Dim::Two).feasible);

  Formation a = allocationFormation(Dim::Two, {1}, 2, 1, 1);
  Formation b = allocationFormation(Dim::Two, {1}, 2, 2, 20);
  Feasibility f = feasibility({a, b}, Dim::Two);
  CHECK_FALSE(f.feasible);
  CHECK(f.reason == FeasibilityReason::MissingDofExceeded);
  CHECK(f.totalMissing == 4);

  Formation z1 = allocationFormation(Dim::Two, {}, 3, 1, 1);
  Formation z2 = allocationFormation(Dim::Two, {}, 3, 2, 20);
  CHECK(feasibility({z1, z2}, Dim::Two).reason == FeasibilityReason::MissingDofExceeded);
  CHECK_THROWS_AS(planPair2D(z1, z2), InfeasibleError);

  Formation l1 = allocationFormation(Dim::Three, {3}, 3, 1, 1);
  Formation l2 = allocationFormation(Dim::Three, {3}, 3, 2, 20);
  Feasibility g = feasibility({l1, l2}, Dim::Three);
  CHECK_FALSE(g.feasible);
  CHECK(g.reason == FeasibilityReason::TwoLoneLeaders);
  CHECK(std::string(reasonName(g.reason)) == "3D-two-lone-leaders");

  CHECK(feasibility({fixtures::singleton(1)}, Dim::Three).reason == FeasibilityReason::TooFewVertices);
}

TEST_CASE("catalog operations") {
  PartialPattern p321 = opV(opV(opV({}, {0, 1, 2}), {0, 1}), {0});
  CHECK(p321.edges.size() == 6);
  CHECK(p321.nextA == 3);

  PartialPattern p222 = opE(opV(opV({}, {0, 1, 2}), {0, 1}), 2, {0});
  std::map<int, int> out;
  for (auto [a, b] : p222.edges) ++out[a];
  CHECK(out == std::map<int, int>{{0, 2}, {1, 2}, {2, 2}});

  CHECK_THROWS_AS(opE({}, 0, {}), PreconditionError);
  CHECK(findCatalog({3, 2, 1}, {}) != nullptr);
  CHECK(findCatalog({2, 2, 2}, {}) != nullptr);
  CHECK(findCatalog({1, 1, 1, 1, 1, 1}, {}) != nullptr);
}

TEST_CASE("pair sizes by vertex counts") {
  CHECK(pairEdgeCount(Dim::Three, 1, 1) == 1);
  CHECK(pairEdgeCount(Dim::Three, 1, 2) == 2);
  CHECK(pairEdgeCount(Dim::Three, 1, 5) == 3);
  CHECK(pairEdgeCount(Dim::Three, 2, 2) == 4);
  CHECK(pairEdgeCount(Dim::Three, 2, 7) == 5);
  CHECK(pairEdgeCount(Dim::Three, 4, 3) == 6);
  CHECK(pairEdgeCount(Dim::Two, 1, 1) == 1);
  CHECK(pairEdgeCount(Dim::Two, 1, 3) == 2);
  CHECK(pairEdgeCount(Dim::Two, 3, 3) == 3);
}

TEST_CASE("two triangles in 2D") {
  MergePlan p = planPair2D(triangle(1), triangle(4));
  REQUIRE(p.edges.size() == 3);
  CHECK(tailDegrees(p) == std::map<VertexId, int>{{1, 2}, {2, 1}});
  MetaFormation m({triangle(1), triangle(4)}, p.interEdges());
  CHECK(mergedPersistence(m, Dim::Two).persistent);
}

TEST_CASE("triangle and a singleton in 2D") {
  Formation ma = Formation({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});  // vertex 3 is the leader
  MergePlan p = planPair2D(ma, fixtures::singleton(9));
  REQUIRE(p.edges.size() == 2);
  for (const PlannedEdge& e : p.edges) CHECK(e.edge.tail == 9);
}

TEST_CASE("3D pair with allocation (3,2,1) and a zero-DOF target") {
  Formation a = allocationFormation(Dim::Three, {3, 2, 1}, 0, 3, 1);
  Formation b = allocationFormation(Dim::Three, {}, 1, 4, 20);
  MergePlan p = planPair3D(a, b);
  REQUIRE(p.edges.size() == 6);
  std::vector<int> degs;
  for (auto [v, k] : tailDegrees(p)) degs.push_back(k);
  std::sort(degs.rbegin(), degs.rend());
  CHECK(degs == std::vector<int>{3, 2, 1});
  std::vector<VertexId> heads;
  for (const PlannedEdge& e : p.edges) heads.push_back(e.edge.head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  CHECK(heads.size() >= 3);
  PlanReport r = verifyPlan({a, b}, p.interEdges(), Dim::Three);
  CHECK(r.persistent);
  CHECK(r.structurallyPersistent);
}

TEST_CASE("lone leaders are rejected") {
  Formation l1 = allocationFormation(Dim::Three, {3}, 3, 1, 1);
  Formation l2 = allocationFormation(Dim::Three, {3}, 3, 2, 20);
  try {
    planPair3D(l1, l2);
    FAIL("expected infeasible");
  } catch (const InfeasibleError& e) {
    CHECK(e.reason() == FeasibilityReason::TwoLoneLeaders);
  }
}

TEST_CASE("collections") {
  MergePlan three = planCollection({triangle(1), triangle(4), triangle(7)}, Dim::Two);
  CHECK(three.edges.size() == 6);
  CHECK(verifyPlan({triangle(1), triangle(4), triangle(7)}, three.interEdges(), Dim::Two).persistent);

  std::vector<Formation> mixed = {fixtures::k4(1), fixtures::pair(10), fixtures::singleton(20)};
  MergePlan m = planCollection(mixed, Dim::Three);
  CHECK(m.edges.size() == 8);
  PlanReport r = verifyPlan(mixed, m.interEdges(), Dim::Three);
  CHECK(r.persistent);
  CHECK(r.structurallyPersistent);
  CHECK(r.edgeOptimalPersistent);
  CHECK(r.missingDofConserved);
}

TEST_CASE("zero-DOF member goes last") {
  Formation zero = allocationFormation(Dim::Three, {}, 1, 1, 1);
  Formation s1 = allocationFormation(Dim::Three, {3, 2, 1}, 1, 2, 20);
  Formation s2 = allocationFormation(Dim::Three, {3, 2, 1}, 1, 3, 40);
  std::vector<Formation> c = {zero, s1, s2};
  MergePlan p = planCollection(c, Dim::Three);
  CHECK(p.order.back() == 0);
  CHECK(p.edges.size() == 12);
  PlanReport r = verifyPlan(c, p.interEdges(), Dim::Three);
  CHECK(r.persistent);
  CHECK(r.edgeOptimalPersistent);
}

TEST_CASE("plan verification detects removed and redundant edges") {
  std::vector<Formation> c = {triangle(1), triangle(4)};
  std::vector<Edge> plan = planPair2D(triangle(1), triangle(4)).interEdges();
  PlanReport ok = verifyPlan(c, plan, Dim::Two);
  CHECK(ok.persistent);
  CHECK(ok.edgeOptimalPersistent);

  std::vector<Edge> fewer(plan.begin(), plan.end() - 1);
  PlanReport less = verifyPlan(c, fewer, Dim::Two);
  CHECK_FALSE(less.persistent);
  CHECK_FALSE(less.edgeOptimalPersistent);

  // Vertex 4 leads the second triangle and still has two local DOFs.
  std::vector<Edge> more = plan;
  more.push_back({4, 3});
  PlanReport extra = verifyPlan(c, more, Dim::Two);
  CHECK(extra.persistent);
  CHECK_FALSE(extra.edgeOptimalPersistent);

  CHECK_THROWS_AS(verifyPlan(c, {{1, 99}}, Dim::Two), InputError);
}
