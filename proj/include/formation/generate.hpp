#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formation/graph.hpp"

namespace formation {

Formation tetrahedron(VertexId first = 1);
// Two K4s sharing the axis {1,2} through bars only: 8 vertices, 18 edges.
Formation doubleBanana();

// Directed Henneberg growth: vertex additions with `dim` out-edges and
// edge splits. Output ids are offset, offset+1, ...
Formation minPersistent(Dim d, std::size_t n, std::uint64_t seed, VertexId offset = 1);
// Same undirected graph as min-persistent-2d, edge directions randomized.
Formation minRigid2D(std::size_t n, std::uint64_t seed, VertexId offset = 1);

// Persistent formation whose non-zero vertex DOFs are `alloc` (descending
// or not), grown by `extra` vertex additions. Bodies only: >= 3 vertices in
// 3D, >= 2 in 2D. PreconditionError if the allocation is unreachable.
Formation allocationFormation(Dim d, std::vector<int> alloc, std::size_t extra, std::uint64_t seed,
                              VertexId offset = 1);

// Dispatch for the CLI: min-rigid-2d, min-persistent-2d, min-persistent-3d, tetra, banana.
Formation generate(const std::string& kind, std::size_t n, std::uint64_t seed, VertexId offset = 1);

}  // namespace formation
