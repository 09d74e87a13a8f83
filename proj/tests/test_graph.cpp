#include "doctest.h"
#include "formation/io.hpp"
#include "support.hpp"

using namespace formation;

TEST_CASE("parse a directed triangle") {
  Formation f = parseFormation(R"({"vertices":[1,2,3],"edges":[[2,1],[3,1],[3,2]]})");
  CHECK(f.vertexCount() == 3);
  CHECK(f.edgeCount() == 3);
  CHECK(f.outDegrees() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("single vertex formation") {
  Formation f = parseFormation(R"({"vertices":[1],"edges":[]})");
  CHECK(f.vertexCount() == 1);
  CHECK(f.edgeCount() == 0);
}

TEST_CASE("malformed formations are rejected") {
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[1,2],"edges":[[1,2],[2,1]]})"), InputError);
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[1,2],"edges":[[1,1]]})"), InputError);
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[1,2],"edges":[[1,3]]})"), InputError);
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[1,1],"edges":[]})"), InputError);
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[-1],"edges":[]})"), InputError);
  CHECK_THROWS_AS(parseFormation(R"({"vertices":[1,2],"edges":[[1]]})"), InputError);
  CHECK_THROWS_AS(parseFormation("not json"), InputError);
}

TEST_CASE("error messages carry a location") {
  try {
    parseFormation(R"({"vertices":[1,2],"edges":[[1,2],[2,1]]})");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
  }
}

TEST_CASE("flatten two triangles with three inter-edges") {
  MetaFormation m({fixtures::triangle(1), fixtures::triangle(4)}, {{1, 4}, {1, 5}, {2, 4}});
  Formation f = flatten(m);
  CHECK(f.vertexCount() == 6);
  CHECK(f.edgeCount() == 9);
}

TEST_CASE("flatten identity and singleton pair") {
  MetaFormation one({fixtures::triangle(1)}, {});
  CHECK(flatten(one) == fixtures::triangle(1));
  MetaFormation two({fixtures::singleton(1), fixtures::singleton(2)}, {{1, 2}});
  Formation f = flatten(two);
  CHECK(f.vertexCount() == 2);
  CHECK(f.edgeCount() == 1);
}

TEST_CASE("meta-formation validation") {
  CHECK_THROWS_AS(MetaFormation({fixtures::triangle(1), fixtures::triangle(3)}, {}), InputError);
  CHECK_THROWS_AS(MetaFormation({fixtures::triangle(1), fixtures::triangle(4)}, {{1, 2}}), InputError);
  CHECK_THROWS_AS(MetaFormation({fixtures::triangle(1), fixtures::triangle(4)}, {{1, 9}}), InputError);
  CHECK_THROWS_AS(MetaFormation({fixtures::triangle(1), fixtures::triangle(4)}, {{1, 4}, {4, 1}}), InputError);
}

TEST_CASE("underlying view") {
  UndirectedView v = underlying(fixtures::triangle(1));
  CHECK(v.vertexCount() == 3);
  CHECK(v.edgeCount() == 3);
  CHECK(v.link(0) == Edge{1, 2});
  UndirectedView empty = underlying(Formation({1, 2, 3}, {}));
  CHECK(empty.edgeCount() == 0);
}

TEST_CASE("meta-formation round trip and DOT export") {
  MetaFormation m({fixtures::triangle(1), fixtures::triangle(4)}, {{1, 4}, {1, 5}, {2, 4}});
  MetaFormation back = parseMetaFormation(toJson(m).dump());
  CHECK(back == m);
  std::string dot = exportDot(m);
  std::size_t dashed = 0;
  for (std::size_t p = dot.find("style=dashed"); p != std::string::npos; p = dot.find("style=dashed", p + 1)) ++dashed;
  CHECK(dashed == 3);
}

TEST_CASE("collection formats") {
  auto a = parseCollection(R"([{"vertices":[1],"edges":[]},{"vertices":[2],"edges":[]}])");
  auto b = parseCollection(R"({"formations":[{"vertices":[1],"edges":[]},{"vertices":[2],"edges":[]}]})");
  CHECK(a.size() == 2);
  CHECK(b.size() == 2);
  CHECK_THROWS_AS(parseCollection(R"([{"vertices":[1],"edges":[]},{"vertices":[1],"edges":[]}])"), InputError);
}
