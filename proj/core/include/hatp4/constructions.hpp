#pragma once

#include <cstdint>

#include "hatp4/graph.hpp"

namespace hatp4 {

/// Part sizes and matching placement of the extremal construction on n vertices.
struct ExtremalLayout {
    int part_a = 0;        // vertices 0..part_a-1
    int part_b = 0;        // vertices part_a..n-1
    bool matching_in_a = true;
    int matching_edges = 0;
};

/// Layout for n >= 4, writing n = 4k + r:
///   r=0: K_{2k,2k},     k matching edges in A
///   r=1: K_{2k,2k+1},   k matching edges in the 2k-part
///   r=2: K_{2k,2k+2},   k matching edges in the 2k-part
///   r=3: K_{2k+1,2k+2}, k+1 matching edges in the (2k+2)-part
ExtremalLayout extremal_layout(int n);

/// Complete bipartite graph A+B plus a matching on consecutive pairs
/// {2i, 2i+1} (offset by the part's first vertex) inside the designated part.
/// Every matching edge lies in one triangle per vertex of the other part, so
/// the triangle count is floor(n^2/8). Throws PreconditionError for n < 4.
Graph extremal_construction(int n);

/// Two K4s on {0,1,2,3} and {0,4,5,6} sharing vertex 0.
Graph two_k4_shared_vertex();

/// floor(n^2 / 8), exact integer arithmetic.
std::uint64_t predicted_extremal_value(std::uint64_t n);

}  // namespace hatp4
