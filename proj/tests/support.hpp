#pragma once
#include <vector>

#include "formation/graph.hpp"

namespace fixtures {

using formation::Edge;
using formation::Formation;
using formation::VertexId;

inline Formation triangle(VertexId a = 1) {
  return Formation({a, a + 1, a + 2}, {{a + 1, a}, {a + 2, a}, {a + 2, a + 1}});
}

inline Formation k4(VertexId a = 1) {
  return Formation({a, a + 1, a + 2, a + 3},
                   {{a + 1, a}, {a + 2, a}, {a + 2, a + 1}, {a + 3, a}, {a + 3, a + 1}, {a + 3, a + 2}});
}

inline Formation singleton(VertexId a) { return Formation({a}, {}); }

inline Formation pair(VertexId a) { return Formation({a, a + 1}, {{a + 1, a}}); }

}  // namespace fixtures
