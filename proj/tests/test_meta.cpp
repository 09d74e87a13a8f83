#include "doctest.h"
#include "formation/generate.hpp"
#include "formation/meta.hpp"
#include "support.hpp"

using namespace formation;
using fixtures::k4;
using fixtures::triangle;

namespace {

MetaFormation twoTetra(std::vector<Edge> inter) { return MetaFormation({k4(1), k4(5)}, std::move(inter)); }

const std::vector<Edge> kGoodSix = {{1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 5}};

}  // namespace

TEST_CASE("classification") {
  MetaClass c2 = classify(MetaFormation({triangle(1), fixtures::singleton(9)}, {}), Dim::Two);
  CHECK(c2.n == std::vector<std::size_t>{0});
  CHECK(c2.s == std::vector<std::size_t>{1});
  CHECK(c2.bound() == 2);

  MetaClass c3 = classify(MetaFormation({k4(1), fixtures::pair(10), fixtures::singleton(20)}, {}), Dim::Three);
  CHECK(c3.n == std::vector<std::size_t>{0});
  CHECK(c3.d == std::vector<std::size_t>{1});
  CHECK(c3.s == std::vector<std::size_t>{2});
  CHECK(c3.bound() == 8);

  Formation c4({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK_THROWS_AS(classify(MetaFormation({c4, fixtures::singleton(9)}, {}), Dim::Two), PreconditionError);
}

TEST_CASE("meta rigidity in 2D") {
  auto good = metaRigid2D(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {2, 4}}));
  CHECK(good.rigid);
  CHECK(good.selected.size() == 3);
  CHECK(good.edgeOptimal);

  auto star = metaRigid2D(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {2, 4}, {3, 4}}));
  CHECK_FALSE(star.rigid);
  auto* w = std::get_if<MetaViolation>(&star.witness);
  REQUIRE(w != nullptr);
  CHECK(w->edges.size() == 3);
  CHECK(w->count.bound == 2);

  auto single = metaRigid2D(MetaFormation({triangle(1), fixtures::singleton(7)}, {{7, 1}, {7, 2}}));
  CHECK(single.rigid);
  CHECK(single.selected.size() == 2);
}

TEST_CASE("meta counts in 3D") {
  MetaFormation m = twoTetra(kGoodSix);
  MetaClass cls = classify(m, Dim::Three);
  MetaCount six = metaCount(m, cls, {0, 1, 2, 3, 4, 5});
  CHECK(six.bound == 6);
  CHECK_FALSE(six.violated());

  MetaFormation seven = twoTetra({{1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 5}, {4, 8}});
  CHECK(metaCount(seven, cls, {0, 1, 2, 3, 4, 5, 6}).violated());

  MetaFormation fan = twoTetra({{1, 5}, {2, 5}, {3, 5}, {4, 5}});
  MetaCount f = metaCount(fan, cls, {0, 1, 2, 3});
  CHECK(f.bound == 3);
  CHECK(f.violated());
}

TEST_CASE("meta rigidity in 3D") {
  Formation banana = doubleBanana();
  Formation left({1, 3, 4, 5}, {}), right({2, 6, 7, 8}, {});
  std::vector<Edge> li, ri, inter;
  for (const Edge& e : banana.edges()) {
    bool l = left.hasVertex(e.tail), lh = left.hasVertex(e.head);
    if (l && lh)
      li.push_back(e);
    else if (!l && !lh)
      ri.push_back(e);
    else
      inter.push_back(e);
  }
  MetaFormation bm({Formation({1, 3, 4, 5}, li), Formation({2, 6, 7, 8}, ri)}, inter);
  CHECK(inter.size() == 6);
  auto b = metaRigid3D(bm);
  CHECK_FALSE(b.rigid);
  CHECK(b.counting == CountingStatus::Found);
  CHECK(b.rank == 17u);

  auto good = metaRigid3D(twoTetra(kGoodSix));
  CHECK(good.rigid);
  CHECK(good.edgeOptimal);

  auto single = metaRigid3D(MetaFormation({k4(1), fixtures::singleton(9)}, {{9, 1}, {9, 2}, {9, 3}}));
  CHECK(single.rigid);
}

TEST_CASE("edge-optimal rigidity") {
  CHECK(edgeOptimalRigid(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {2, 4}}), Dim::Two));
  CHECK_FALSE(edgeOptimalRigid(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {2, 4}, {3, 6}}), Dim::Two));
  CHECK(edgeOptimalRigid(twoTetra(kGoodSix), Dim::Three));
}

TEST_CASE("edge-optimal persistence") {
  CHECK(edgeOptimalPersistent(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {2, 4}}), Dim::Two));
  CHECK_FALSE(edgeOptimalPersistent(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {3, 4}}), Dim::Two));
  CHECK_FALSE(
      edgeOptimalPersistent(MetaFormation({triangle(1), triangle(4)}, {{1, 4}, {1, 5}, {2, 4}, {4, 3}}), Dim::Two));
}

TEST_CASE("substitution keeps vertices and bodies") {
  MetaFormation m({fixtures::k4(1), triangle(10)}, {{10, 1}, {10, 2}, {11, 3}});
  MetaFormation s = substituteMinimal(m, Dim::Two);
  CHECK(s.metaVertices()[0].edgeCount() == 5);
  CHECK(s.metaVertices()[1].edgeCount() == 3);
  CHECK(s.interEdges() == m.interEdges());
}
