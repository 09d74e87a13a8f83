#include <algorithm>

#include "doctest.h"
#include "formation/generate.hpp"
#include "formation/rigidity.hpp"
#include "support.hpp"

using namespace formation;

namespace {

UndirectedView complete(std::size_t n) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) {
    vs.push_back(static_cast<VertexId>(i));
    for (std::size_t j = 1; j < i; ++j) es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  }
  return underlying(Formation(vs, es));
}

UndirectedView cycle4() { return underlying(Formation({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})); }

UndirectedView octahedron() {
  // Opposite pairs (1,2), (3,4), (5,6) are non-adjacent.
  std::vector<Edge> es;
  for (VertexId a = 1; a <= 6; ++a)
    for (VertexId b = a + 1; b <= 6; ++b)
      if (!((a + 1) / 2 == (b + 1) / 2)) es.push_back({b, a});
  return underlying(Formation({1, 2, 3, 4, 5, 6}, es));
}

}  // namespace

TEST_CASE("modular arithmetic") {
  CHECK(modp::mul(modp::inverse(12345), 12345) == 1);
  CHECK(modp::add(modp::kPrime - 1, 1) == 0);
  CHECK(modp::rank({{1, 2}, {2, 4}}, 2) == 1);
  CHECK(modp::rank({{1, 2}, {2, 5}}, 2) == 2);
}

TEST_CASE("f(d,n) and required rank") {
  CHECK(dofConstant(Dim::Two, 1) == 2);
  CHECK(dofConstant(Dim::Two, 5) == 3);
  CHECK(dofConstant(Dim::Three, 1) == 3);
  CHECK(dofConstant(Dim::Three, 2) == 5);
  CHECK(dofConstant(Dim::Three, 7) == 6);
  CHECK(requiredRank(Dim::Three, 8) == 18);
  CHECK(requiredRank(Dim::Two, 2) == 1);
}

TEST_CASE("Laman: triangle, 4-cycle, K4") {
  auto tri = lamanCheck2D(complete(3));
  CHECK(tri.rigid);
  CHECK(tri.minimallyRigid);

  auto c4 = lamanCheck2D(cycle4());
  CHECK_FALSE(c4.rigid);
  CHECK(c4.rank == 4u);
  auto* w = std::get_if<RankDeficit>(&c4.witness);
  REQUIRE(w != nullptr);
  CHECK(w->independent.size() == 4);

  auto k4 = lamanCheck2D(complete(4));
  CHECK(k4.rigid);
  CHECK_FALSE(k4.minimallyRigid);
}

TEST_CASE("sparsity witnesses") {
  auto k5 = sparsityViolation(complete(5), SparsityParams::spatial());
  REQUIRE(k5.has_value());
  CHECK(k5->size() == 10);
  CHECK_FALSE(sparsityViolation(underlying(doubleBanana()), SparsityParams::spatial()).has_value());
  CHECK_FALSE(sparsityViolation(complete(3), SparsityParams::planar()).has_value());
  CHECK_THROWS_AS(sparsityViolation(complete(8), SparsityParams::spatial(), 6), ResourceError);
}

TEST_CASE("generic rank oracle") {
  CHECK(genericRankOracle(complete(4), Dim::Three, 1, 3).rank == 6);
  auto banana = genericRankOracle(underlying(doubleBanana()), Dim::Three, 1, 3);
  CHECK(banana.rank == 17);
  CHECK(banana.required == 18);
  auto edge = genericRankOracle(complete(2), Dim::Two, 1, 3);
  CHECK(edge.rank == 1);
  CHECK(edge.rigid());
}

TEST_CASE("three-connectivity") {
  auto banana = threeConnectivity(underlying(doubleBanana()));
  CHECK_FALSE(banana.threeConnected);
  REQUIRE(banana.pair.has_value());
  CHECK(banana.pair->first == 1);
  CHECK(banana.pair->second == 2);
  CHECK(threeConnectivity(complete(4)).threeConnected);
  auto path = threeConnectivity(underlying(Formation({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(path.threeConnected);
}

TEST_CASE("3D rigidity") {
  auto banana = rigid3DCheck(underlying(doubleBanana()));
  CHECK_FALSE(banana.rigid);
  CHECK(banana.rank == 17u);
  auto* pair = std::get_if<SeparatingPair>(&banana.witness);
  REQUIRE(pair != nullptr);
  CHECK(pair->first == 1);
  CHECK(pair->second == 2);

  auto k4 = rigid3DCheck(complete(4));
  CHECK(k4.rigid);
  CHECK(k4.minimallyRigid);
  auto oct = rigid3DCheck(octahedron());
  CHECK(oct.rigid);
  CHECK(oct.minimallyRigid);
  CHECK_FALSE(rigid3DCheck(complete(5)).minimallyRigid);
}

TEST_CASE("minimally rigid spanning subgraphs") {
  auto view = complete(4);
  auto any = minimallyRigidSpanning(view, Dim::Two, {});
  CHECK(any.size() == 5);
  CHECK(lamanCheck2D(view.subgraph(any)).minimallyRigid);

  // Edges of complete(4): 0:(2,1) 1:(3,1) 2:(3,2) form the triangle 1-2-3.
  auto fixed = minimallyRigidSpanning(view, Dim::Two, {{0, 1, 2}});
  CHECK(fixed.size() == 5);
  for (std::size_t e : {0, 1, 2}) CHECK(std::count(fixed.begin(), fixed.end(), e) == 1);

  auto tri = minimallyRigidSpanning(complete(3), Dim::Two, {{0, 1, 2}});
  CHECK(tri == std::vector<std::size_t>{0, 1, 2});

  auto k5 = minimallyRigidSpanning(complete(5), Dim::Three, {});
  CHECK(k5.size() == 9);
  CHECK(rigid3DCheck(complete(5).subgraph(k5)).minimallyRigid);

  CHECK_THROWS_AS(minimallyRigidSpanning(cycle4(), Dim::Two, {}), PreconditionError);
  CHECK_THROWS_AS(minimallyRigidSpanning(view, Dim::Two, {{0, 1, 2}, {3, 4, 5, 0}}), PreconditionError);
}

TEST_CASE("rank monotonicity under edge addition") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    Formation g = minRigid2D(6, rng());
    auto view = underlying(g);
    std::vector<std::size_t> prefix;
    std::size_t last = 0;
    for (std::size_t e = 0; e < view.edgeCount(); ++e) {
      prefix.push_back(e);
      std::size_t r = genericRankOracle(view.subgraph(prefix), Dim::Two, 3, 3).rank;
      CHECK(r >= last);
      last = r;
    }
  }
}
